#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gridfill/instance.hpp"

namespace gridfill {

enum class Route { EqualSets, Wide, N3K4, Oracle };

std::string route_name(Route r);
std::optional<Route> route_from_name(std::string_view name);

// Branch record of the n=3, k=4 construction. v1..v4 are the four
// distinguished values (pairwise distinct); perm maps procedure position to
// original row index (row 1 never moves). i0 is reported in original row
// numbering, i_witness in the numbering current when case 4 was decided.
struct CaseTrace {
    bool case2b = false;
    Col r = 0;  // case 2b: minimal column with (S_1r ∩ S_{i0,1}) - {v1} nonempty
    int i0 = 0;
    bool case4b = false;
    Col s = 0;  // case 4b: minimal column >= 2 with a_2s in S_31 ∪ S_41
    int i_witness = 0;
    Value v1 = 0, v2 = 0, v3 = 0, v4 = 0;
    std::array<int, 4> perm{1, 2, 3, 4};

    std::string render() const;
};

// Labels and per-row forbidden windows of the k >= 2n-1 construction.
struct WideTrace {
    std::vector<Value> labels;        // distinct first-column choices c_1..c_k
    std::vector<ValueSet> forbidden;  // F_i, |F_i| = k-n

    std::string render() const;
};

struct SolveOutcome {
    enum class Kind { Solved, Infeasible, Unknown, Unsupported };
    Kind kind = Kind::Unsupported;
    Route route = Route::Oracle;
    std::optional<Assignment> assignment;  // Solved
    std::optional<CaseTrace> trace;        // Solved via N3K4
    std::optional<WideTrace> wide_trace;   // Solved via Wide
    Col infeasible_column = 0;             // Infeasible (oracle fallback)
    std::string reason;                    // Unknown / Unsupported

    // Deterministic one-line route/trace summary (CLI output).
    std::string render() const;
};

// Thrown when a fill position has no eligible value. Unreachable from the
// constructive solvers on valid instances; reaching it there is a bug.
struct NoEligibleValue : std::runtime_error {
    Col column;  // kTailCol: the tail position
    explicit NoEligibleValue(Col column_);
};

// Cyclic solution for k = n+1 when every candidate set is the same set S:
// with S sorted as s_1..s_k, a_ij = s_{((i+j-2) mod k)+1} for j <= n, then
// constant. Throws std::invalid_argument unless k = n+1 and |S| = k.
Assignment solve_equal_sets(int n, int k, const ValueSet& s);

// Distinct first-column representatives c_i in S_i1, one per row. Greedy
// ascending seed plus augmenting paths; always succeeds because each set has
// as many elements as there are rows. Throws std::invalid_argument if some
// set's size differs from the number of rows.
std::vector<Value> sdr_first_column(const std::vector<ValueSet>& first_col_sets);

struct FilledRow {
    std::vector<Value> entries;
    Value tail = 0;
};

// Completes one row left to right, then the tail, picking the smallest value
// that keeps rule (2) satisfiable and avoids `forbidden` (preplaced
// positions are kept verbatim and bypass `forbidden`). A choice at a column
// < n also avoids values preplaced at columns >= n, so those placements
// never end up violating (2b). Throws NoEligibleValue when stuck.
FilledRow fill_row(const std::vector<ValueSet>& column_sets,
                   const ValueSet& tail_set,
                   int n,
                   const std::map<Col, Value>& preplaced,
                   const ValueSet& forbidden);

struct WideResult {
    Assignment assignment;
    WideTrace trace;
};

// k >= 2n-1 construction: distinct first-column labels, then row i avoids
// the k-n labels of rows at circular offsets n..k-1. For every row pair one
// of the two first-column values is forbidden forever in the other row,
// which keeps all prefix sets distinct.
WideResult solve_wide(const Instance& inst);

struct MinR {
    Col r;     // may be horizon+1: the qualifying column is in the tail
    int i0;    // smallest qualifying row among 2..k
    Value v2;  // smallest element of (S_1r ∩ S_{i0,1}) - {v1}
};

// Minimal column j >= 2 (tail counted as horizon+1) such that
// (S_1j ∩ S_i1) - {v1} is nonempty for some row i >= 2. nullopt means no
// column qualifies, including every column past the horizon.
std::optional<MinR> find_min_r(const Instance& inst, Value v1);

struct MinS {
    Col s;     // may be row2 horizon + 1 (the tail value qualified)
    int row;   // 3 or 4; 3 preferred on ties
    Value v3;  // the row-2 value found
};

// Minimal column s >= 2 with the row-2 value in S_31 or S_41.
std::optional<MinS> find_min_s(const Instance& inst, const FilledRow& row2);

struct N3K4Result {
    Assignment assignment;
    CaseTrace trace;
};

// The four-row, block-length-3 construction. Arbitrary choices are resolved
// as "smallest eligible value"; the two case splits may reorder rows 2..4,
// and the permutation is inverted before returning.
N3K4Result solve_n3k4(const Instance& inst);

// Dispatch: equal-sets cyclic solution when k = n+1 and all sets coincide;
// wide construction when k >= 2n-1; the n=3, k=4 construction; otherwise a
// budgeted oracle search. Solved outcomes always pass verify (checked).
SolveOutcome solve(const Instance& inst,
                   std::optional<Route> forced = std::nullopt);

}  // namespace gridfill
