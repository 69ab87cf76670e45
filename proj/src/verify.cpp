#include "gridfill/verify.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gridfill {

namespace {

void check_dims(const Instance& inst, const Assignment& a) {
    if (inst.n != a.n || inst.k != a.k)
        throw std::invalid_argument(
            "dimension mismatch: instance (n=" + std::to_string(inst.n) +
            ", k=" + std::to_string(inst.k) + ") vs assignment (n=" +
            std::to_string(a.n) + ", k=" + std::to_string(a.k) + ")");
}

void check_pair(const Assignment& a, int row1, int row2) {
    if (row1 < 1 || row1 > a.k || row2 < 1 || row2 > a.k)
        throw std::out_of_range("row out of range 1.." + std::to_string(a.k));
    if (row1 == row2) throw std::invalid_argument("rows must differ");
}

std::string col_text(Col col) {
    return col == kTailCol ? "tail" : std::to_string(col);
}

// First column whose entry is `v` (tail counted as out_horizon + 1), or
// kOpenEnd when the row never takes the value.
Col first_occurrence(const Assignment& a, int row, Value v) {
    const auto& entries = a.entries[static_cast<std::size_t>(row - 1)];
    for (Col j = 1; j <= a.out_horizon; ++j)
        if (entries[static_cast<std::size_t>(j - 1)] == v) return j;
    if (a.tail_values[static_cast<std::size_t>(row - 1)] == v) return a.out_horizon + 1;
    return kOpenEnd;
}

}  // namespace

std::string rule_id(Rule r) {
    switch (r) {
        case Rule::Membership: return "1";
        case Rule::BlockDistinct: return "2a";
        case Rule::BlockAvoid: return "2b";
        case Rule::PrefixSets: return "3";
    }
    return "?";
}

std::string VerificationReport::render() const {
    std::ostringstream os;
    for (const auto& v : violations) {
        os << "RULE " << rule_id(v.rule) << " rows=";
        for (std::size_t i = 0; i < v.rows.size(); ++i) {
            if (i) os << ',';
            os << v.rows[i];
        }
        os << " col=" << col_text(v.col) << " : " << v.message << '\n';
    }
    return os.str();
}

std::vector<Violation> check_rule1(const Instance& inst, const Assignment& a) {
    check_dims(inst, a);
    std::vector<Violation> out;
    const Col last = std::max(a.out_horizon, inst.horizon);
    for (int i = 1; i <= a.k; ++i) {
        for (Col j = 1; j <= last; ++j) {
            const Value v = a.entry(i, j);
            if (!contains(inst.column_set(i, j), v))
                out.push_back({Rule::Membership, {i}, j,
                               "value " + std::to_string(v) + " not in candidate set"});
        }
        const Value t = a.tail_values[static_cast<std::size_t>(i - 1)];
        if (!contains(inst.tails[static_cast<std::size_t>(i - 1)], t))
            out.push_back({Rule::Membership, {i}, kTailCol,
                           "tail value " + std::to_string(t) + " not in tail set"});
    }
    return out;
}

std::vector<Violation> check_rule2(const Instance& inst, const Assignment& a) {
    check_dims(inst, a);
    std::vector<Violation> out;
    const int n = a.n;
    for (int i = 1; i <= a.k; ++i) {
        for (Col q = 2; q <= n; ++q)
            for (Col p = 1; p < q; ++p)
                if (a.entry(i, p) == a.entry(i, q)) {
                    out.push_back({Rule::BlockDistinct, {i}, q,
                                   "entry repeats column " + std::to_string(p) +
                                       " inside the distinct block"});
                    break;
                }
        // The block itself is covered by (2a) above; past it, entries and the
        // tail must avoid the first n-1 values.
        auto in_head = [&](Value v) {
            for (Col p = 1; p < n; ++p)
                if (a.entry(i, p) == v) return true;
            return false;
        };
        for (Col j = n + 1; j <= a.out_horizon; ++j)
            if (in_head(a.entry(i, j)))
                out.push_back({Rule::BlockAvoid, {i}, j,
                               "entry revisits one of the first n-1 values"});
        if (in_head(a.tail_values[static_cast<std::size_t>(i - 1)]))
            out.push_back({Rule::BlockAvoid, {i}, kTailCol,
                           "tail value revisits one of the first n-1 values"});
    }
    return out;
}

std::vector<Violation> check_rule3(const Instance& inst, const Assignment& a) {
    check_dims(inst, a);
    std::vector<Violation> out;
    const Col stab = stabilization_column(a);
    for (int i1 = 1; i1 <= a.k; ++i1)
        for (int i2 = i1 + 1; i2 <= a.k; ++i2) {
            std::set<Value> m1, m2;
            for (Col j = 1; j <= stab; ++j) {
                m1.insert(a.entry(i1, j));
                m2.insert(a.entry(i2, j));
                if (m1 == m2) {
                    out.push_back({Rule::PrefixSets, {i1, i2}, j,
                                   "prefix sets coincide"});
                    break;
                }
            }
        }
    return out;
}

bool p_holds(const Assignment& a, int row1, int row2, Col col) {
    check_pair(a, row1, row2);
    return prefix_set(a, row1, col).values != prefix_set(a, row2, col).values;
}

bool q_holds(const Assignment& a, int row1, int row2) {
    check_pair(a, row1, row2);
    const Col stab = stabilization_column(a);
    std::set<Value> m1, m2;
    for (Col j = 1; j <= stab; ++j) {
        m1.insert(a.entry(row1, j));
        m2.insert(a.entry(row2, j));
        if (m1 == m2) return false;
    }
    return true;
}

VerificationReport verify(const Instance& inst, const Assignment& a) {
    VerificationReport rep;
    auto add = [&](std::vector<Violation>&& vs) {
        for (auto& v : vs) rep.violations.push_back(std::move(v));
    };
    add(check_rule1(inst, a));
    add(check_rule2(inst, a));
    add(check_rule3(inst, a));
    auto key = [](const Violation& v) {
        return std::make_tuple(rule_id(v.rule), v.rows,
                               v.col == kTailCol ? std::numeric_limits<Col>::max()
                                                 : v.col);
    };
    std::stable_sort(rep.violations.begin(), rep.violations.end(),
                     [&](const Violation& x, const Violation& y) { return key(x) < key(y); });
    rep.ok = rep.violations.empty();
    return rep;
}

std::string WitnessTrace::render() const {
    std::ostringstream os;
    if (!q_true) {
        os << "Q fails at col=" << first_violation;
        return os.str();
    }
    os << "Q holds:";
    for (const auto& ph : phases) {
        os << " x=" << ph.value << " owner=" << ph.owner << " cols=[" << ph.begin_col
           << ',' << (ph.end_col == kOpenEnd ? std::string("inf") : std::to_string(ph.end_col))
           << (ph.end_col == kOpenEnd ? ")" : "]") << ';';
    }
    return os.str();
}

WitnessTrace explain_pair(const Assignment& a, int row1, int row2) {
    check_pair(a, row1, row2);
    WitnessTrace trace;
    const Col stab = stabilization_column(a);
    {
        std::set<Value> m1, m2;
        for (Col j = 1; j <= stab; ++j) {
            m1.insert(a.entry(row1, j));
            m2.insert(a.entry(row2, j));
            if (m1 == m2) {
                trace.q_true = false;
                trace.first_violation = j;
                return trace;
            }
        }
    }
    trace.q_true = true;
    Col j = 1;
    while (true) {
        const ValueSet s1 = prefix_set(a, row1, j).values;
        const ValueSet s2 = prefix_set(a, row2, j).values;
        // Candidate witnesses: values in exactly one of the two prefix sets.
        // A candidate owned by one row distinguishes the pair up to the column
        // before the other row first takes it.
        bool have = false;
        Value best_v = 0;
        int best_owner = 0;
        Col best_end = 0;  // kOpenEnd ranks above any finite column
        auto consider = [&](Value v, int owner, int other) {
            const Col first = first_occurrence(a, other, v);
            const Col end = first == kOpenEnd ? kOpenEnd : first - 1;
            const bool better =
                !have ||
                (end == kOpenEnd && best_end != kOpenEnd) ||
                (end != kOpenEnd && best_end != kOpenEnd && end > best_end) ||
                ((end == best_end) && v < best_v);
            if (better) {
                have = true;
                best_v = v;
                best_owner = owner;
                best_end = end;
            }
        };
        for (Value v : s1)
            if (!contains(s2, v)) consider(v, row1, row2);
        for (Value v : s2)
            if (!contains(s1, v)) consider(v, row2, row1);
        trace.phases.push_back({best_v, best_owner, j, best_end});
        if (best_end == kOpenEnd) break;
        j = best_end + 1;
    }
    return trace;
}

}  // namespace gridfill
