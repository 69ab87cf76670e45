#include "gridfill/solve.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "gridfill/oracle.hpp"
#include "gridfill/verify.hpp"

namespace gridfill {

namespace {

// Node budget of the oracle fallback used by the dispatcher.
constexpr std::uint64_t kFallbackBudget = 20'000'000;

Value smallest_excluding(const ValueSet& s, std::initializer_list<Value> excluded) {
    for (Value v : s)
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) return v;
    throw NoEligibleValue(1);
}

}  // namespace

NoEligibleValue::NoEligibleValue(Col column_)
    : std::runtime_error("no eligible value at " +
                         (column_ == kTailCol ? std::string("tail")
                                              : "column " + std::to_string(column_))),
      column(column_) {}

std::string route_name(Route r) {
    switch (r) {
        case Route::EqualSets: return "equal";
        case Route::Wide: return "wide";
        case Route::N3K4: return "n3k4";
        case Route::Oracle: return "oracle";
    }
    return "?";
}

std::optional<Route> route_from_name(std::string_view name) {
    if (name == "equal") return Route::EqualSets;
    if (name == "wide") return Route::Wide;
    if (name == "n3k4") return Route::N3K4;
    if (name == "oracle") return Route::Oracle;
    return std::nullopt;
}

std::string CaseTrace::render() const {
    std::ostringstream os;
    os << "case2=";
    if (case2b)
        os << "2b r=" << r << " i0=" << i0 << " v2=" << v2;
    else
        os << "2a";
    os << " case4=";
    if (case4b)
        os << "4b s=" << s << " i=" << i_witness << " v3=" << v3;
    else
        os << "4a";
    os << " v=[" << v1 << ',' << v2 << ',' << v3 << ',' << v4 << "] perm=[";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) os << ',';
        os << perm[i];
    }
    os << ']';
    return os.str();
}

std::string WideTrace::render() const {
    std::ostringstream os;
    os << "labels=[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ',';
        os << labels[i];
    }
    os << ']';
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
        os << " F" << i + 1 << "={";
        for (std::size_t t = 0; t < forbidden[i].size(); ++t) {
            if (t) os << ',';
            os << forbidden[i][t];
        }
        os << '}';
    }
    return os.str();
}

std::string SolveOutcome::render() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Solved:
            os << "route=" << route_name(route);
            if (trace) os << '\n' << trace->render();
            if (wide_trace) os << '\n' << wide_trace->render();
            break;
        case Kind::Infeasible:
            os << "infeasible(column " << infeasible_column << ")";
            break;
        case Kind::Unknown:
            os << "unknown(" << reason << ")";
            break;
        case Kind::Unsupported:
            os << "unsupported: " << reason;
            break;
    }
    return os.str();
}

Assignment solve_equal_sets(int n, int k, const ValueSet& s) {
    if (k != n + 1) throw std::invalid_argument("solve_equal_sets: requires k = n+1");
    if (static_cast<int>(s.size()) != k)
        throw std::invalid_argument("solve_equal_sets: |S| must equal k");
    if (!is_canonical_set(s) || s.front() < 1)
        throw std::invalid_argument("solve_equal_sets: S must be a sorted set of positive values");
    Assignment a;
    a.n = n;
    a.k = k;
    a.out_horizon = n;
    a.entries.assign(static_cast<std::size_t>(k),
                     std::vector<Value>(static_cast<std::size_t>(n)));
    a.tail_values.assign(static_cast<std::size_t>(k), 0);
    for (int i = 1; i <= k; ++i) {
        for (Col j = 1; j <= n; ++j)
            a.entries[i - 1][static_cast<std::size_t>(j - 1)] =
                s[static_cast<std::size_t>((i + j - 2) % k)];
        a.tail_values[i - 1] = a.entries[i - 1][static_cast<std::size_t>(n - 1)];
    }
    return a;
}

std::vector<Value> sdr_first_column(const std::vector<ValueSet>& first_col_sets) {
    const int k = static_cast<int>(first_col_sets.size());
    for (const auto& s : first_col_sets)
        if (static_cast<int>(s.size()) != k)
            throw std::invalid_argument(
                "sdr_first_column: every set must have exactly one element per row");
    std::map<Value, int> owner;              // value -> row holding it (0-based)
    std::vector<Value> pick(static_cast<std::size_t>(k), 0);

    // Greedy ascending seed; rows it cannot serve get an augmenting path.
    // With k rows and k-element sets Hall's condition is automatic, so the
    // augmentation never fails.
    std::function<bool(int, std::set<Value>&)> augment = [&](int row,
                                                             std::set<Value>& visited) {
        for (Value v : first_col_sets[static_cast<std::size_t>(row)]) {
            if (visited.count(v)) continue;
            visited.insert(v);
            const auto it = owner.find(v);
            if (it == owner.end() || augment(it->second, visited)) {
                owner[v] = row;
                pick[static_cast<std::size_t>(row)] = v;
                return true;
            }
        }
        return false;
    };

    for (int row = 0; row < k; ++row) {
        bool placed = false;
        for (Value v : first_col_sets[static_cast<std::size_t>(row)]) {
            if (owner.count(v)) continue;
            owner[v] = row;
            pick[static_cast<std::size_t>(row)] = v;
            placed = true;
            break;
        }
        if (!placed) {
            std::set<Value> visited;
            if (!augment(row, visited))
                throw std::logic_error("sdr_first_column: no system of distinct representatives");
        }
    }
    return pick;
}

FilledRow fill_row(const std::vector<ValueSet>& column_sets,
                   const ValueSet& tail_set,
                   int n,
                   const std::map<Col, Value>& preplaced,
                   const ValueSet& forbidden) {
    const Col horizon = static_cast<Col>(column_sets.size());
    if (n < 1) throw std::invalid_argument("fill_row: n must be >= 1");
    if (horizon < n) throw std::invalid_argument("fill_row: horizon below n");
    std::vector<Value> entry(static_cast<std::size_t>(horizon), 0);
    std::vector<char> fixed(static_cast<std::size_t>(horizon), 0);
    for (const auto& [c, v] : preplaced) {
        if (c < 1 || c > horizon)
            throw std::invalid_argument("fill_row: preplaced column out of range");
        entry[static_cast<std::size_t>(c - 1)] = v;
        fixed[static_cast<std::size_t>(c - 1)] = 1;
    }

    // Undecided slots hold 0, which never collides with real values (>= 1).
    auto blocked = [&](Col j, Value v) {
        if (contains(forbidden, v)) return true;
        if (j <= n) {
            for (Col c = 1; c <= n; ++c)
                if (c != j && entry[static_cast<std::size_t>(c - 1)] == v) return true;
        } else {
            for (Col c = 1; c < n; ++c)
                if (entry[static_cast<std::size_t>(c - 1)] == v) return true;
        }
        if (j < n)
            for (const auto& [c, w] : preplaced)
                if (c > n && w == v) return true;
        return false;
    };

    for (Col j = 1; j <= horizon; ++j) {
        if (fixed[static_cast<std::size_t>(j - 1)]) continue;
        bool placed = false;
        for (Value v : column_sets[static_cast<std::size_t>(j - 1)]) {
            if (blocked(j, v)) continue;
            entry[static_cast<std::size_t>(j - 1)] = v;
            placed = true;
            break;
        }
        if (!placed) throw NoEligibleValue(j);
    }

    for (Value v : tail_set) {
        if (contains(forbidden, v)) continue;
        bool hit = false;
        for (Col c = 1; c < n; ++c)
            if (entry[static_cast<std::size_t>(c - 1)] == v) {
                hit = true;
                break;
            }
        if (hit) continue;
        return {std::move(entry), v};
    }
    throw NoEligibleValue(kTailCol);
}

WideResult solve_wide(const Instance& inst) {
    if (inst.k < 2 * inst.n - 1)
        throw std::invalid_argument("solve_wide: requires k >= 2n-1");
    const int k = inst.k;
    const int n = inst.n;

    std::vector<ValueSet> first_col;
    first_col.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) first_col.push_back(inst.column_set(i, 1));
    const std::vector<Value> labels = sdr_first_column(first_col);

    // Row i permanently avoids the labels of rows at circular offsets
    // n..k-1: for any pair at offset d, either d or k-d lands in that window
    // exactly when k >= 2n-1, so one row's first value never enters the
    // other row.
    std::vector<ValueSet> forbidden(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        for (int d = n; d <= k - 1; ++d)
            forbidden[static_cast<std::size_t>(i - 1)].push_back(
                labels[static_cast<std::size_t>((i - 1 + d) % k)]);
        canonicalize(forbidden[static_cast<std::size_t>(i - 1)]);
    }

    Assignment a;
    a.n = n;
    a.k = k;
    a.out_horizon = inst.horizon;
    for (int i = 1; i <= k; ++i) {
        FilledRow fr = fill_row(inst.sets[static_cast<std::size_t>(i - 1)],
                                inst.tails[static_cast<std::size_t>(i - 1)], n,
                                {{1, labels[static_cast<std::size_t>(i - 1)]}},
                                forbidden[static_cast<std::size_t>(i - 1)]);
        a.entries.push_back(std::move(fr.entries));
        a.tail_values.push_back(fr.tail);
    }
    return {std::move(a), WideTrace{labels, std::move(forbidden)}};
}

std::optional<MinR> find_min_r(const Instance& inst, Value v1) {
    for (Col j = 2; j <= inst.horizon + 1; ++j) {
        const ValueSet& s1 = inst.column_set(1, j);
        for (int i = 2; i <= inst.k; ++i) {
            const ValueSet& si1 = inst.column_set(i, 1);
            for (Value v : s1) {
                if (v == v1) continue;
                if (contains(si1, v)) return MinR{j, i, v};
            }
        }
    }
    return std::nullopt;
}

std::optional<MinS> find_min_s(const Instance& inst, const FilledRow& row2) {
    if (inst.k < 4) throw std::invalid_argument("find_min_s: requires k >= 4");
    const Col jout = static_cast<Col>(row2.entries.size());
    for (Col s = 2; s <= jout + 1; ++s) {
        const Value v = s <= jout ? row2.entries[static_cast<std::size_t>(s - 1)] : row2.tail;
        if (contains(inst.column_set(3, 1), v)) return MinS{s, 3, v};
        if (contains(inst.column_set(4, 1), v)) return MinS{s, 4, v};
    }
    return std::nullopt;
}

N3K4Result solve_n3k4(const Instance& inst) {
    if (inst.n != 3 || inst.k != 4)
        throw std::invalid_argument("solve_n3k4: requires n=3 and k=4");
    const Col J = inst.horizon;
    Instance work = inst;  // rows 2..4 may be reordered; row 1 never moves
    CaseTrace tr;

    auto swap_rows = [&](int a, int b) {
        std::swap(work.sets[static_cast<std::size_t>(a - 1)],
                  work.sets[static_cast<std::size_t>(b - 1)]);
        std::swap(work.tails[static_cast<std::size_t>(a - 1)],
                  work.tails[static_cast<std::size_t>(b - 1)]);
        std::swap(tr.perm[static_cast<std::size_t>(a - 1)],
                  tr.perm[static_cast<std::size_t>(b - 1)]);
    };

    tr.v1 = work.sets[0][0].front();

    const auto mr = find_min_r(work, tr.v1);
    if (mr) {
        tr.case2b = true;
        tr.r = mr->r;
        tr.i0 = mr->i0;
        tr.v2 = mr->v2;
        if (mr->i0 != 2) swap_rows(2, mr->i0);
    }

    std::array<FilledRow, 4> rows;

    // In case 2a row 1 is completed immediately: no later row can collide
    // with it, because its sets past column 1 miss every S_i1 except
    // possibly at v1, and rows 2..4 start with values other than v1.
    if (!tr.case2b) {
        rows[0] = fill_row(work.sets[0], work.tails[0], 3, {{1, tr.v1}}, {});
        tr.v2 = smallest_excluding(work.sets[1][0], {tr.v1});
    }

    rows[1] = fill_row(work.sets[1], work.tails[1], 3, {{1, tr.v2}}, {tr.v1});

    const auto ms = find_min_s(work, rows[1]);
    if (ms) {
        tr.case4b = true;
        tr.s = ms->s;
        tr.i_witness = ms->row;
        tr.v3 = ms->v3;
        if (ms->row != 3) swap_rows(3, 4);
    } else {
        tr.v3 = smallest_excluding(work.sets[2][0], {tr.v1, tr.v2});
    }

    rows[2] = fill_row(work.sets[2], work.tails[2], 3, {{1, tr.v3}}, {tr.v2});

    tr.v4 = smallest_excluding(work.sets[3][0], {tr.v1, tr.v2, tr.v3});
    rows[3] = fill_row(work.sets[3], work.tails[3], 3, {{1, tr.v4}}, {tr.v3});

    if (tr.case2b) {
        // Complete row 1 around the pinned a_1r = v2, avoiding v4 so row 4's
        // first value never enters row 1. fill_row keeps column 2 away from
        // v2 whenever r >= 3, which protects the pinned placement under (2b).
        std::vector<ValueSet> cols = work.sets[0];
        if (tr.r == J + 1) cols.push_back(work.tails[0]);
        rows[0] = fill_row(cols, work.tails[0], 3, {{1, tr.v1}, {tr.r, tr.v2}}, {tr.v4});
    }

    Col jout = J;
    if (tr.case2b) jout = std::max(jout, tr.r);
    if (tr.case4b) jout = std::max(jout, tr.s);

    Assignment a;
    a.n = 3;
    a.k = 4;
    a.out_horizon = jout;
    a.entries.assign(4, {});
    a.tail_values.assign(4, 0);
    for (int p = 1; p <= 4; ++p) {
        FilledRow& fr = rows[static_cast<std::size_t>(p - 1)];
        // Extending a filled row with copies of its tail value matches what a
        // longer fill horizon would have chosen: past the block, the eligible
        // set of every tail-governed column equals the tail's eligible set.
        fr.entries.resize(static_cast<std::size_t>(jout), fr.tail);
        const int original = tr.perm[static_cast<std::size_t>(p - 1)];
        a.entries[static_cast<std::size_t>(original - 1)] = std::move(fr.entries);
        a.tail_values[static_cast<std::size_t>(original - 1)] = fr.tail;
    }
    return {std::move(a), tr};
}

SolveOutcome solve(const Instance& inst, std::optional<Route> forced) {
    validate(inst);

    Route route;
    if (forced) {
        route = *forced;
        const bool equal_ok = inst.k == inst.n + 1 && inst.all_sets_equal();
        if (route == Route::EqualSets && !equal_ok)
            return {SolveOutcome::Kind::Unsupported, route, std::nullopt, std::nullopt,
                    std::nullopt, 0,
                    "equal route requires k = n+1 and identical candidate sets"};
        if (route == Route::Wide && inst.k < 2 * inst.n - 1)
            return {SolveOutcome::Kind::Unsupported, route, std::nullopt, std::nullopt,
                    std::nullopt, 0, "wide route requires k >= 2n-1"};
        if (route == Route::N3K4 && (inst.n != 3 || inst.k != 4))
            return {SolveOutcome::Kind::Unsupported, route, std::nullopt, std::nullopt,
                    std::nullopt, 0, "n3k4 route requires n=3 and k=4"};
    } else if (inst.k == inst.n + 1 && inst.all_sets_equal()) {
        route = Route::EqualSets;
    } else if (inst.k >= 2 * inst.n - 1) {
        route = Route::Wide;
    } else if (inst.n == 3 && inst.k == 4) {
        route = Route::N3K4;
    } else {
        route = Route::Oracle;
    }

    SolveOutcome out;
    out.route = route;
    switch (route) {
        case Route::EqualSets:
            out.kind = SolveOutcome::Kind::Solved;
            out.assignment = solve_equal_sets(inst.n, inst.k, inst.sets[0][0]);
            break;
        case Route::Wide: {
            WideResult res = solve_wide(inst);
            out.kind = SolveOutcome::Kind::Solved;
            out.assignment = std::move(res.assignment);
            out.wide_trace = std::move(res.trace);
            break;
        }
        case Route::N3K4: {
            N3K4Result res = solve_n3k4(inst);
            out.kind = SolveOutcome::Kind::Solved;
            out.assignment = std::move(res.assignment);
            out.trace = res.trace;
            break;
        }
        case Route::Oracle: {
            OracleConfig cfg;
            cfg.node_budget = kFallbackBudget;
            OracleOutcome oo = brute_force(inst, cfg);
            switch (oo.kind) {
                case OracleOutcome::Kind::Solution:
                    out.kind = SolveOutcome::Kind::Solved;
                    out.assignment = std::move(oo.assignment);
                    break;
                case OracleOutcome::Kind::Infeasible:
                    out.kind = SolveOutcome::Kind::Infeasible;
                    out.infeasible_column = oo.infeasible_column;
                    break;
                case OracleOutcome::Kind::Unknown:
                    out.kind = SolveOutcome::Kind::Unknown;
                    out.reason = oo.reason;
                    break;
            }
            break;
        }
    }

    if (out.kind == SolveOutcome::Kind::Solved) {
        const VerificationReport rep = verify(inst, *out.assignment);
        if (!rep.ok)
            throw std::logic_error("internal: solver output failed verification\n" +
                                   rep.render());
    }
    return out;
}

}  // namespace gridfill
