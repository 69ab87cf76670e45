#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gridfill/io.hpp"
#include "gridfill/oracle.hpp"
#include "gridfill/solve.hpp"
#include "gridfill/verify.hpp"
#include "test_util.hpp"

using namespace gridfill;
using testutil::uniform_instance;

namespace {

// Every column of this k=2, n=3 instance fills, but row 1's tail set equals
// its forced first two entries, so no stabilization at J = 3 exists. The
// search must answer "unknown", not "infeasible": the prefix itself never
// dies within the horizon.
Instance tail_trap_instance() {
    Instance inst;
    inst.n = 3;
    inst.k = 2;
    inst.horizon = 3;
    inst.sets = {{{1, 2}, {1, 2}, {5, 6}}, {{7, 8}, {7, 8}, {9, 10}}};
    inst.tails = {{1, 2}, {9, 10}};
    return inst;
}

}  // namespace

TEST_CASE("hard_instance builds the all-equal family") {
    const Instance h33 = hard_instance(3, 3);
    CHECK(h33.n == 3);
    CHECK(h33.k == 3);
    CHECK(h33.horizon == 3);
    CHECK(h33.all_sets_equal());
    CHECK(h33.sets[0][0] == ValueSet{1, 2, 3});
    CHECK_NOTHROW(validate(h33));

    const Instance h32 = hard_instance(3, 2);
    CHECK(h32.horizon == 3);
    CHECK(h32.sets[1][2] == ValueSet{1, 2});

    CHECK_THROWS_AS(hard_instance(3, 4), std::invalid_argument);
}

TEST_CASE("the oracle proves the k <= n family infeasible") {
    const OracleOutcome o22 = brute_force(hard_instance(2, 2), {});
    CHECK(o22.kind == OracleOutcome::Kind::Infeasible);
    CHECK(o22.infeasible_column == 2);

    // rule (3) already kills every branch at column 2: both rows exhaust
    // {1,2} there, before the column-3 pigeonhole can even be reached
    const OracleOutcome o32 = brute_force(hard_instance(3, 2), {});
    CHECK(o32.kind == OracleOutcome::Kind::Infeasible);
    CHECK(o32.infeasible_column == 2);
    CHECK(o32.render() == "infeasible(column 2)");

    const OracleOutcome o33 = brute_force(hard_instance(3, 3), {});
    CHECK(o33.kind == OracleOutcome::Kind::Infeasible);
    CHECK(o33.infeasible_column == 3);

    const OracleOutcome o44 = brute_force(hard_instance(4, 4), {});
    CHECK(o44.kind == OracleOutcome::Kind::Infeasible);
    CHECK(o44.infeasible_column == 4);
}

TEST_CASE("infeasibility witnesses are stable under a larger horizon") {
    for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
        const Instance inst = hard_instance(n, k);
        const OracleOutcome base = brute_force(inst, {});
        REQUIRE(base.kind == OracleOutcome::Kind::Infeasible);
        OracleConfig wider;
        wider.horizon = inst.horizon + 2;
        const OracleOutcome again = brute_force(inst, wider);
        CHECK(again.kind == OracleOutcome::Kind::Infeasible);
        CHECK(again.infeasible_column == base.infeasible_column);
    }
}

TEST_CASE("infeasibility survives appending columns to the instance (property)") {
    // The proof reads only columns <= c, so extending the instance with any
    // extra column sets cannot repair it.
    SplitMix64 rng(5150);
    int found = 0;
    for (int t = 0; t < 40; ++t) {
        // alternate the forced all-equal universe (always infeasible) with a
        // looser one
        const Instance inst = gen_instance(
            {static_cast<std::uint64_t>(100 + t), 3, 3, 3, 3 + t % 2});
        const OracleOutcome out = brute_force(inst, {});
        if (out.kind != OracleOutcome::Kind::Infeasible) continue;
        ++found;
        Instance longer = inst;
        longer.horizon += 2;
        for (auto& row : longer.sets) {
            row.push_back(sample_subset(rng, 4, 3));
            row.push_back(sample_subset(rng, 4, 3));
        }
        const OracleOutcome again = brute_force(longer, {});
        CHECK(again.kind == OracleOutcome::Kind::Infeasible);
        CHECK(again.infeasible_column == out.infeasible_column);
    }
    CHECK(found > 0);
}

TEST_CASE("the oracle finds the cyclic solution's instance solvable") {
    const Instance inst = uniform_instance(3, 4, 3, {1, 2, 3, 4});
    const OracleOutcome out = brute_force(inst, {});
    REQUIRE(out.kind == OracleOutcome::Kind::Solution);
    REQUIRE(out.assignment.has_value());
    CHECK(out.assignment->out_horizon == 3);
    CHECK(verify(inst, *out.assignment).ok);
}

TEST_CASE("solutions materialize exactly the search horizon") {
    const Instance inst = uniform_instance(3, 4, 3, {1, 2, 3, 4});
    OracleConfig cfg;
    cfg.horizon = 5;
    const OracleOutcome out = brute_force(inst, cfg);
    REQUIRE(out.kind == OracleOutcome::Kind::Solution);
    CHECK(out.assignment->out_horizon == 5);
    CHECK(verify(inst, *out.assignment).ok);

    OracleConfig low;
    low.horizon = 2;
    CHECK_THROWS_AS(brute_force(inst, low), std::invalid_argument);
}

TEST_CASE("horizon exhaustion is unknown, not infeasible") {
    const Instance inst = tail_trap_instance();
    const OracleOutcome at3 = brute_force(inst, {});
    CHECK(at3.kind == OracleOutcome::Kind::Unknown);
    CHECK(at3.reason == "horizon exhausted");
    CHECK(at3.render() == "unknown(horizon exhausted)");

    // One more column turns the trap into a genuine prefix death: column 4
    // draws from the tail set {1,2}, which (2b) forbids entirely.
    OracleConfig cfg;
    cfg.horizon = 4;
    const OracleOutcome at4 = brute_force(inst, cfg);
    CHECK(at4.kind == OracleOutcome::Kind::Infeasible);
    CHECK(at4.infeasible_column == 4);
}

TEST_CASE("restricting the universe to the set union changes nothing") {
    const Instance inst = gen_instance({9, 3, 4, 3, 6});
    ValueSet universe;
    for (const auto& row : inst.sets)
        for (const auto& s : row) universe.insert(universe.end(), s.begin(), s.end());
    for (const auto& t : inst.tails) universe.insert(universe.end(), t.begin(), t.end());
    canonicalize(universe);

    const OracleOutcome plain = brute_force(inst, {});
    OracleConfig cfg;
    cfg.universe = universe;
    const OracleOutcome restricted = brute_force(inst, cfg);
    CHECK(plain.kind == restricted.kind);
    CHECK(plain.assignment == restricted.assignment);

    // a narrower universe only speaks about the values it keeps
    OracleConfig narrow;
    narrow.universe = {1};
    const OracleOutcome within = brute_force(inst, narrow);
    CHECK(within.kind != OracleOutcome::Kind::Solution);
}

TEST_CASE("an exhausted node budget is reported as unknown") {
    const Instance inst = uniform_instance(3, 4, 3, {1, 2, 3, 4});
    OracleConfig cfg;
    cfg.node_budget = 5;
    const OracleOutcome out = brute_force(inst, cfg);
    CHECK(out.kind == OracleOutcome::Kind::Unknown);
    CHECK(out.reason == "node budget exhausted");
}

TEST_CASE("solver and oracle agree on solvability") {
    for (int t = 1; t <= 40; ++t) {
        const Instance inst = gen_instance({static_cast<std::uint64_t>(t), 3, 4, 3, 5});
        const OracleOutcome oracle = brute_force(inst, {});
        CHECK(oracle.kind == OracleOutcome::Kind::Solution);
        const N3K4Result constructive = solve_n3k4(inst);
        CHECK(verify(inst, constructive.assignment).ok);
    }
}

TEST_CASE("gen_instance is a pure function of its config") {
    const Instance a = gen_instance({1, 3, 4, 4, 8});
    const Instance b = gen_instance({1, 3, 4, 4, 8});
    CHECK(a == b);
    const Instance c = gen_instance({2, 3, 4, 4, 8});
    CHECK(a != c);
    CHECK_NOTHROW(validate(a));

    // U = k forces every set to {1..k}
    const Instance forced = gen_instance({7, 3, 4, 3, 4});
    CHECK(forced.all_sets_equal());
    CHECK(forced.sets[0][0] == ValueSet{1, 2, 3, 4});

    CHECK_THROWS_AS(gen_instance({1, 3, 4, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(gen_instance({1, 3, 4, 2, 8}), std::invalid_argument);
}

TEST_CASE("conjecture_search finds no counterexamples where solutions are known") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.k = 4;
    cfg.count = 100;
    cfg.base_seed = 1;
    cfg.universe = 5;
    const SearchSummary summary = conjecture_search(cfg);
    CHECK(summary.searched == 100);
    CHECK(summary.solved == 100);
    CHECK(summary.unknown == 0);
    CHECK(summary.infeasible == 0);
    CHECK(summary.counterexamples.empty());
    CHECK(summary.render() == "searched=100 solved=100 unknown=0 infeasible=0");

    SearchConfig wide;
    wide.n = 2;
    wide.k = 3;
    wide.count = 50;
    wide.base_seed = 10;
    wide.universe = 5;
    const SearchSummary ws = conjecture_search(wide);
    CHECK(ws.solved == 50);
    CHECK(ws.infeasible == 0);
}

TEST_CASE("conjecture_search flags the forced all-equal k = n family") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.k = 3;
    cfg.count = 20;
    cfg.base_seed = 5;
    cfg.universe = 3;  // k-subsets of {1..3} are forced to {1,2,3}
    const SearchSummary summary = conjecture_search(cfg);
    CHECK(summary.infeasible == 20);
    CHECK(summary.solved == 0);
    REQUIRE(summary.counterexamples.size() == 20);
    CHECK(summary.counterexamples.front().first == 5);
    CHECK(summary.counterexamples.back().first == 24);
    for (const auto& [seed, inst] : summary.counterexamples) CHECK(inst.all_sets_equal());
}

TEST_CASE("worker threads do not change search results") {
    SearchConfig cfg;
    cfg.n = 3;
    cfg.k = 3;
    cfg.count = 30;
    cfg.base_seed = 100;
    cfg.universe = 4;
    const SearchSummary sequential = conjecture_search(cfg);
    cfg.threads = 4;
    const SearchSummary parallel = conjecture_search(cfg);
    CHECK(sequential.render() == parallel.render());
    REQUIRE(sequential.counterexamples.size() == parallel.counterexamples.size());
    for (std::size_t i = 0; i < sequential.counterexamples.size(); ++i) {
        CHECK(sequential.counterexamples[i].first == parallel.counterexamples[i].first);
        CHECK(sequential.counterexamples[i].second == parallel.counterexamples[i].second);
    }
}
