#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <cstdint>
#include <vector>

#include "gridfill/instance.hpp"
#include "gridfill/rng.hpp"

namespace gridfill::testutil {

// Arbitrary eventually-constant assignment; entries need not satisfy any
// rule. Suitable for prefix-set / P / Q semantics checks.
inline Assignment random_assignment(SplitMix64& rng) {
    Assignment a;
    a.n = 1 + static_cast<int>(rng.below(4));
    a.k = 2 + static_cast<int>(rng.below(4));
    a.out_horizon = a.n + static_cast<Col>(rng.below(5));
    const std::uint64_t universe = 2 + rng.below(7);
    for (int i = 0; i < a.k; ++i) {
        std::vector<Value> row;
        for (Col j = 0; j < a.out_horizon; ++j)
            row.push_back(1 + static_cast<Value>(rng.below(universe)));
        a.entries.push_back(std::move(row));
        a.tail_values.push_back(1 + static_cast<Value>(rng.below(universe)));
    }
    return a;
}

// Independent oracle for Q: compare prefix sets column by column well past
// stabilization instead of trusting the stabilization cutoff.
inline bool q_exhaustive(const Assignment& a, int row1, int row2, Col extra) {
    for (Col j = 1; j <= stabilization_column(a) + extra; ++j)
        if (prefix_set(a, row1, j).values == prefix_set(a, row2, j).values) return false;
    return true;
}

// Instance with every candidate set equal to `s`.
inline Instance uniform_instance(int n, int k, Col cols, const ValueSet& s) {
    Instance inst;
    inst.n = n;
    inst.k = k;
    inst.horizon = cols;
    inst.sets.assign(static_cast<std::size_t>(k),
                     std::vector<ValueSet>(static_cast<std::size_t>(cols), s));
    inst.tails.assign(static_cast<std::size_t>(k), s);
    return inst;
}

// n=3, k=4 instance that lands in case 2a: row 1 draws its first set from
// the lower half of {1..universe} and everything later from the upper half,
// while rows 2..4 stay entirely in the lower half, so row 1's later sets
// miss every other row's first-column set. Requires universe >= 8.
inline Instance split_instance(std::uint64_t seed, Col cols, Value universe) {
    SplitMix64 rng(seed);
    const Value lo = universe / 2;
    auto lower = [&] { return sample_subset(rng, lo, 4); };
    auto upper = [&] {
        ValueSet s = sample_subset(rng, universe - lo, 4);
        for (auto& v : s) v += lo;
        return s;
    };
    Instance inst;
    inst.n = 3;
    inst.k = 4;
    inst.horizon = cols;
    std::vector<ValueSet> row1;
    row1.push_back(lower());
    for (Col j = 1; j < cols; ++j) row1.push_back(upper());
    inst.sets.push_back(std::move(row1));
    inst.tails.push_back(upper());
    for (int i = 2; i <= 4; ++i) {
        std::vector<ValueSet> row;
        for (Col j = 0; j < cols; ++j) row.push_back(lower());
        inst.sets.push_back(std::move(row));
        inst.tails.push_back(lower());
    }
    return inst;
}

}  // namespace gridfill::testutil
