#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridfill/instance.hpp"

namespace gridfill {

struct OracleConfig {
    // Columns materialized by the search; 0 means the instance horizon.
    // Must not be below the instance horizon.
    Col horizon = 0;
    // Placement attempts allowed; 0 = unlimited.
    std::uint64_t node_budget = 0;
    // Optional value restriction. Empty means unrestricted, which equals the
    // default of "union of the instance's sets": membership already confines
    // every choice to its governing set. A restriction below that union
    // narrows the search space, so Infeasible then only speaks about
    // assignments drawn from the restricted values.
    ValueSet universe;
};

struct OracleOutcome {
    enum class Kind { Solution, Infeasible, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<Assignment> assignment;  // Solution, J_out = search horizon
    // Infeasible: every partial assignment dies at some column <= this one.
    // The proof reads only columns <= infeasible_column, so it holds for the
    // original infinite problem and for any extension of the instance.
    Col infeasible_column = 0;
    std::string reason;  // Unknown: "horizon exhausted" | "node budget exhausted"

    std::string render() const;
};

// Column-major exhaustive search over eventually-constant assignments that
// stabilize at the configured horizon H: fill column j for rows 1..k, check
// rule (3) after each completed column, and at column H choose tail values
// with pairwise-distinct stabilized prefix sets. Exploration order is
// ascending values, rows in index order. A search that ran out of tree only
// counts as infeasible if no branch ever completed column H; otherwise a
// later-stabilizing assignment could still exist and the outcome is Unknown.
OracleOutcome brute_force(const Instance& inst, const OracleConfig& cfg = {});

// Every candidate set equal to {1..k}, J = n. Unsolvable whenever k <= n:
// the first k entries of any two rows are forced to exhaust {1..k}, making
// their prefix sets collide by column k. Throws std::invalid_argument for
// k > n, where the construction proves nothing.
Instance hard_instance(int n, int k);

// Each candidate set is an independent uniform k-subset of {1..universe},
// drawn row by row (J column sets then the tail set) from one splitmix64
// stream seeded with cfg.seed. Pure function of the config.
Instance gen_instance(const GenConfig& cfg);

struct SearchConfig {
    int n = 0;
    int k = 0;
    int count = 0;
    std::uint64_t base_seed = 0;
    Value universe = 0;
    Col horizon = 0;  // 0: use J = n, the generated instances' horizon
    std::uint64_t node_budget = 0;
    int threads = 1;
};

struct SearchSummary {
    int searched = 0;
    int solved = 0;
    int unknown = 0;
    int infeasible = 0;
    // Instances the oracle proved infeasible, by seed; candidates for
    // counterexamples in the k >= n+1 regime.
    std::vector<std::pair<std::uint64_t, Instance>> counterexamples;

    std::string render() const;  // "searched=.. solved=.. unknown=.. infeasible=.."
};

// Generates `count` instances with seeds base_seed..base_seed+count-1 and
// runs brute_force on each. Worker threads split the seed range; tallies and
// counterexamples are merged in seed order, so the summary is identical to
// a sequential run.
SearchSummary conjecture_search(const SearchConfig& cfg);

}  // namespace gridfill
