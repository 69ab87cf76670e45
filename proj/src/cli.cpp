#include "gridfill/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "gridfill/io.hpp"
#include "gridfill/oracle.hpp"
#include "gridfill/solve.hpp"
#include "gridfill/verify.hpp"

namespace gridfill {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw std::runtime_error("cannot write file: " + path);
    outf << content;
    if (!outf) throw std::runtime_error("cannot write file: " + path);
}

struct SolveArgs {
    std::string instance_path;
    std::string out_path;
    std::string force_route;
};

struct VerifyArgs {
    std::string instance_path;
    std::string assignment_path;
};

struct OracleArgs {
    std::string instance_path;
    Col horizon = 0;
    std::uint64_t budget = 0;
};

struct GenArgs {
    std::uint64_t seed = 0;
    int n = 0;
    int k = 0;
    Col cols = 0;
    Value universe = 0;
    std::string out_path;
};

struct SearchArgs {
    int n = 0;
    int k = 0;
    int count = 0;
    std::uint64_t seed = 0;
    Value universe = 0;
    Col horizon = 0;
    int threads = 1;
};

struct HardArgs {
    int n = 0;
    int k = 0;
    std::string out_path;
};

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const Instance inst = parse_instance(read_file(a.instance_path));
    std::optional<Route> forced;
    if (!a.force_route.empty()) {
        forced = route_from_name(a.force_route);
        if (!forced) {
            err << "unknown route: " << a.force_route << "\n";
            return 2;
        }
    }
    const SolveOutcome outcome = solve(inst, forced);
    switch (outcome.kind) {
        case SolveOutcome::Kind::Solved:
            write_file(a.out_path, serialize_assignment(*outcome.assignment));
            out << outcome.render() << "\n";
            return 0;
        case SolveOutcome::Kind::Infeasible:
        case SolveOutcome::Kind::Unknown:
            out << outcome.render() << "\n";
            return 1;
        case SolveOutcome::Kind::Unsupported:
            err << outcome.render() << "\n";
            return 2;
    }
    return 2;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
    const Instance inst = parse_instance(read_file(a.instance_path));
    const Assignment assignment = parse_assignment(read_file(a.assignment_path));
    const VerificationReport rep = verify(inst, assignment);
    if (rep.ok) {
        out << "OK\n";
        return 0;
    }
    out << rep.render();
    return 1;
}

int do_oracle(const OracleArgs& a, std::ostream& out) {
    const Instance inst = parse_instance(read_file(a.instance_path));
    OracleConfig cfg;
    cfg.horizon = a.horizon;
    cfg.node_budget = a.budget;
    const OracleOutcome outcome = brute_force(inst, cfg);
    out << outcome.render() << "\n";
    if (outcome.kind == OracleOutcome::Kind::Solution) {
        out << serialize_assignment(*outcome.assignment);
        return 0;
    }
    return 1;
}

int do_gen(const GenArgs& a) {
    const Instance inst = gen_instance({a.seed, a.n, a.k, a.cols, a.universe});
    write_file(a.out_path, serialize_instance(inst));
    return 0;
}

int do_search(const SearchArgs& a, std::ostream& out) {
    SearchConfig cfg;
    cfg.n = a.n;
    cfg.k = a.k;
    cfg.count = a.count;
    cfg.base_seed = a.seed;
    cfg.universe = a.universe;
    cfg.horizon = a.horizon;
    cfg.threads = a.threads;
    const SearchSummary summary = conjecture_search(cfg);
    out << summary.render() << "\n";
    for (const auto& [seed, inst] : summary.counterexamples) {
        const std::string path = "counterexample-" + std::to_string(seed) + ".inst";
        write_file(path, serialize_instance(inst));
        out << "counterexample seed=" << seed << " -> " << path << "\n";
    }
    return summary.infeasible > 0 ? 1 : 0;
}

int do_hard(const HardArgs& a) {
    const Instance inst = hard_instance(a.n, a.k);
    write_file(a.out_path, serialize_instance(inst));
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"solver, verifier and exhaustive oracle for prefix-distinct grid filling"};
    app.name("gridfill");
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance constructively");
    solve_cmd->add_option("instance", solve_args.instance_path, "instance file")->required();
    solve_cmd->add_option("-o,--out", solve_args.out_path, "assignment output file")->required();
    solve_cmd->add_option("--force-route", solve_args.force_route,
                          "one of equal|wide|n3k4|oracle");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "check an assignment against an instance");
    verify_cmd->add_option("instance", verify_args.instance_path, "instance file")->required();
    verify_cmd->add_option("assignment", verify_args.assignment_path, "assignment file")
        ->required();

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search");
    oracle_cmd->add_option("instance", oracle_args.instance_path, "instance file")->required();
    oracle_cmd->add_option("--horizon", oracle_args.horizon, "search horizon (default: J)");
    oracle_cmd->add_option("--budget", oracle_args.budget, "node budget (0 = unlimited)");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded random instance");
    gen_cmd->add_option("--seed", gen_args.seed, "RNG seed")->required();
    gen_cmd->add_option("--n", gen_args.n, "distinct block length")->required();
    gen_cmd->add_option("--k", gen_args.k, "rows / set size")->required();
    gen_cmd->add_option("--cols", gen_args.cols, "explicit columns J")->required();
    gen_cmd->add_option("--universe", gen_args.universe, "values drawn from 1..U")->required();
    gen_cmd->add_option("-o,--out", gen_args.out_path, "instance output file")->required();

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "oracle over many seeded instances");
    search_cmd->add_option("--n", search_args.n, "distinct block length")->required();
    search_cmd->add_option("--k", search_args.k, "rows / set size")->required();
    search_cmd->add_option("--count", search_args.count, "number of instances")->required();
    search_cmd->add_option("--seed", search_args.seed, "base seed")->required();
    search_cmd->add_option("--universe", search_args.universe, "values drawn from 1..U")
        ->required();
    search_cmd->add_option("--horizon", search_args.horizon, "search horizon (default: n)");
    search_cmd->add_option("--threads", search_args.threads, "worker threads");

    HardArgs hard_args;
    auto* hard_cmd = app.add_subcommand("hard", "emit the all-equal-sets instance (k <= n)");
    hard_cmd->add_option("--n", hard_args.n, "distinct block length")->required();
    hard_cmd->add_option("--k", hard_args.k, "rows / set size")->required();
    hard_cmd->add_option("-o,--out", hard_args.out_path, "instance output file")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) return do_solve(solve_args, out, err);
        if (verify_cmd->parsed()) return do_verify(verify_args, out);
        if (oracle_cmd->parsed()) return do_oracle(oracle_args, out);
        if (gen_cmd->parsed()) return do_gen(gen_args);
        if (search_cmd->parsed()) return do_search(search_args, out);
        if (hard_cmd->parsed()) return do_hard(hard_args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace gridfill
