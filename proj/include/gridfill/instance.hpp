#pragma once

#include <cstdint>
#include <vector>

#include "gridfill/types.hpp"

namespace gridfill {

// A problem instance in the eventually-constant encoding: candidate sets are
// listed explicitly for columns 1..horizon, and every later column of row i
// is governed by the constant tail set tails[i-1]. Rows and columns are
// 1-based in the public interface; storage is 0-based.
//
// Invariants: |S_ij| = k for every listed set and every tail set, all values
// are >= 1, and horizon >= n (the distinct block always lies inside the
// explicit prefix).
struct Instance {
    int n = 0;
    int k = 0;
    Col horizon = 0;                          // J
    std::vector<std::vector<ValueSet>> sets;  // [row-1][col-1], col <= horizon
    std::vector<ValueSet> tails;              // [row-1], governs col > horizon

    // Governing candidate set of (row, col); col may exceed the horizon.
    const ValueSet& column_set(int row, Col col) const;

    // True when every listed set and every tail set is the same set.
    bool all_sets_equal() const;

    bool operator==(const Instance&) const = default;
};

void validate(const Instance& inst);  // throws std::invalid_argument

// An eventually-constant assignment: entry(row, col) equals the row's tail
// value for every col > out_horizon. out_horizon >= n and all values >= 1.
struct Assignment {
    int n = 0;
    int k = 0;
    Col out_horizon = 0;                      // J_out
    std::vector<std::vector<Value>> entries;  // [row-1][col-1]
    std::vector<Value> tail_values;           // [row-1]

    Value entry(int row, Col col) const;

    bool operator==(const Assignment&) const = default;
};

void validate(const Assignment& a);  // throws std::invalid_argument

struct PrefixSet {
    int row = 0;
    Col col = 0;
    ValueSet values;
};

// The set of the first `col` entries of `row`. Monotone in col and constant
// once col reaches stabilization_column(a).
PrefixSet prefix_set(const Assignment& a, int row, Col col);

// out_horizon + 1: every prefix set is constant from this column on, since
// all later entries equal the tail value already present there.
Col stabilization_column(const Assignment& a);

// Reproducible random-instance generation parameters. Requires universe >= k
// so that k-element subsets of {1..universe} exist.
struct GenConfig {
    std::uint64_t seed = 0;
    int n = 0;
    int k = 0;
    Col cols = 0;        // J of the generated instance
    Value universe = 0;  // sets are drawn from {1..universe}
};

}  // namespace gridfill
