#include "gridfill/instance.hpp"

#include <stdexcept>
#include <string>

namespace gridfill {

namespace {

void check_row(int row, int k, const char* who) {
    if (row < 1 || row > k)
        throw std::out_of_range(std::string(who) + ": row " + std::to_string(row) +
                                " out of range 1.." + std::to_string(k));
}

void check_col(Col col, const char* who) {
    if (col < 1)
        throw std::invalid_argument(std::string(who) + ": column must be >= 1");
}

}  // namespace

const ValueSet& Instance::column_set(int row, Col col) const {
    check_row(row, k, "Instance::column_set");
    check_col(col, "Instance::column_set");
    if (col <= horizon) return sets[row - 1][static_cast<std::size_t>(col - 1)];
    return tails[row - 1];
}

bool Instance::all_sets_equal() const {
    if (sets.empty()) return true;
    const ValueSet& ref = sets[0][0];
    for (const auto& row : sets)
        for (const auto& s : row)
            if (s != ref) return false;
    for (const auto& t : tails)
        if (t != ref) return false;
    return true;
}

void validate(const Instance& inst) {
    if (inst.n < 1) throw std::invalid_argument("instance: n must be >= 1");
    if (inst.k < 1) throw std::invalid_argument("instance: k must be >= 1");
    if (inst.horizon < inst.n) throw std::invalid_argument("instance: horizon below n");
    if (static_cast<int>(inst.sets.size()) != inst.k ||
        static_cast<int>(inst.tails.size()) != inst.k)
        throw std::invalid_argument("instance: row count differs from k");
    auto check_set = [&](const ValueSet& s, const char* what) {
        if (static_cast<int>(s.size()) != inst.k)
            throw std::invalid_argument(std::string("instance: ") + what +
                                        " must have exactly k elements");
        if (!is_canonical_set(s))
            throw std::invalid_argument(std::string("instance: ") + what +
                                        " must be sorted without duplicates");
        if (s.front() < 1)
            throw std::invalid_argument(std::string("instance: ") + what +
                                        " holds a non-positive value");
    };
    for (const auto& row : inst.sets) {
        if (static_cast<Col>(row.size()) != inst.horizon)
            throw std::invalid_argument("instance: column count differs from horizon");
        for (const auto& s : row) check_set(s, "candidate set");
    }
    for (const auto& t : inst.tails) check_set(t, "tail set");
}

Value Assignment::entry(int row, Col col) const {
    check_row(row, k, "Assignment::entry");
    check_col(col, "Assignment::entry");
    if (col <= out_horizon) return entries[row - 1][static_cast<std::size_t>(col - 1)];
    return tail_values[row - 1];
}

void validate(const Assignment& a) {
    if (a.n < 1) throw std::invalid_argument("assignment: n must be >= 1");
    if (a.k < 1) throw std::invalid_argument("assignment: k must be >= 1");
    if (a.out_horizon < a.n) throw std::invalid_argument("assignment: out_horizon below n");
    if (static_cast<int>(a.entries.size()) != a.k ||
        static_cast<int>(a.tail_values.size()) != a.k)
        throw std::invalid_argument("assignment: row count differs from k");
    for (const auto& row : a.entries) {
        if (static_cast<Col>(row.size()) != a.out_horizon)
            throw std::invalid_argument("assignment: row length differs from out_horizon");
        for (Value v : row)
            if (v < 1) throw std::invalid_argument("assignment: non-positive entry");
    }
    for (Value t : a.tail_values)
        if (t < 1) throw std::invalid_argument("assignment: non-positive tail value");
}

PrefixSet prefix_set(const Assignment& a, int row, Col col) {
    check_row(row, a.k, "prefix_set");
    check_col(col, "prefix_set");
    PrefixSet p;
    p.row = row;
    p.col = col;
    const Col materialized = std::min(col, a.out_horizon);
    p.values.assign(a.entries[row - 1].begin(),
                    a.entries[row - 1].begin() + static_cast<std::size_t>(materialized));
    if (col > a.out_horizon) p.values.push_back(a.tail_values[row - 1]);
    canonicalize(p.values);
    return p;
}

Col stabilization_column(const Assignment& a) {
    return a.out_horizon + 1;
}

}  // namespace gridfill
