#pragma once

#include <string>
#include <vector>

#include "gridfill/instance.hpp"

namespace gridfill {

// The four rules an assignment must satisfy against an instance:
//   (1)  membership: every entry lies in its governing candidate set;
//   (2a) the first n entries of each row are pairwise distinct;
//   (2b) entries at columns >= n avoid the row's first n-1 entries;
//   (3)  all row pairs have different prefix sets at every column.
enum class Rule { Membership, BlockDistinct, BlockAvoid, PrefixSets };

std::string rule_id(Rule r);  // "1", "2a", "2b", "3"

struct Violation {
    Rule rule;
    std::vector<int> rows;  // one row for rules 1/2, the pair for rule 3
    Col col;                // kTailCol marks the constant tail
    std::string message;
};

struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;
    // One line per violation, "RULE <id> rows=<..> col=<j|tail> : <message>",
    // sorted by (rule, rows, col) with the tail ordered last.
    std::string render() const;
};

// Each check throws std::invalid_argument on an instance/assignment
// dimension mismatch (caller misuse, not a rule violation).
std::vector<Violation> check_rule1(const Instance& inst, const Assignment& a);
std::vector<Violation> check_rule2(const Instance& inst, const Assignment& a);

// Per pair, reports the smallest column <= stabilization_column(a) whose
// prefix sets coincide; no report for a pair means Q holds for it.
std::vector<Violation> check_rule3(const Instance& inst, const Assignment& a);

// P(row1, row2, col): the two prefix sets at `col` differ.
bool p_holds(const Assignment& a, int row1, int row2, Col col);

// Q(row1, row2): P holds at every column. Decided exactly by scanning
// columns 1..stabilization_column(a); beyond that all prefix sets are
// constant, so no later column can flip the answer.
bool q_holds(const Assignment& a, int row1, int row2);

VerificationReport verify(const Instance& inst, const Assignment& a);

inline constexpr Col kOpenEnd = -1;

// One certificate segment: value is in owner's prefix set but not the other
// row's, for every column in [begin_col, end_col] (end_col == kOpenEnd means
// every later column too).
struct WitnessPhase {
    Value value = 0;
    int owner = 0;
    Col begin_col = 0;
    Col end_col = kOpenEnd;
};

struct WitnessTrace {
    bool q_true = false;
    Col first_violation = 0;           // set when !q_true
    std::vector<WitnessPhase> phases;  // cover [1, inf) exactly when q_true
    std::string render() const;
};

// Reconstructs a covering witness for Q(row1, row2), or the first violating
// column when Q fails. Phases are chosen greedily: at each start column the
// longest-surviving distinguishing value wins, smallest value on ties.
WitnessTrace explain_pair(const Assignment& a, int row1, int row2);

}  // namespace gridfill
