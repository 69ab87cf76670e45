#include "gridfill/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gridfill/rng.hpp"

namespace gridfill {

std::string OracleOutcome::render() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Solution:
            os << "solution J_out=" << (assignment ? assignment->out_horizon : 0);
            break;
        case Kind::Infeasible:
            os << "infeasible(column " << infeasible_column << ")";
            break;
        case Kind::Unknown:
            os << "unknown(" << reason << ")";
            break;
    }
    return os.str();
}

namespace {

// Column-major depth-first search. Rule (3) is checked after every completed
// column; tail choices additionally need pairwise-distinct stabilized prefix
// sets. Failures inside the tail phase never count as infeasibility
// evidence: they only say "not with stabilization at this horizon".
class Searcher {
  public:
    Searcher(const Instance& inst, Col horizon, std::uint64_t budget,
             const ValueSet& universe)
        : inst_(inst),
          horizon_(horizon),
          budget_(budget),
          universe_(universe),
          entries_(static_cast<std::size_t>(inst.k)),
          prefix_(static_cast<std::size_t>(inst.k)),
          tails_(static_cast<std::size_t>(inst.k), 0) {
        for (auto& row : entries_) row.reserve(static_cast<std::size_t>(horizon));
    }

    OracleOutcome run() {
        const bool solved = place(1, 1);
        OracleOutcome out;
        if (solved) {
            out.kind = OracleOutcome::Kind::Solution;
            Assignment a;
            a.n = inst_.n;
            a.k = inst_.k;
            a.out_horizon = horizon_;
            a.entries = entries_;
            a.tail_values = tails_;
            out.assignment = std::move(a);
        } else if (budget_hit_) {
            out.kind = OracleOutcome::Kind::Unknown;
            out.reason = "node budget exhausted";
        } else if (reached_tail_) {
            out.kind = OracleOutcome::Kind::Unknown;
            out.reason = "horizon exhausted";
        } else {
            out.kind = OracleOutcome::Kind::Infeasible;
            out.infeasible_column = deepest_fail_;
        }
        return out;
    }

  private:
    bool allowed(Value v) const { return universe_.empty() || contains(universe_, v); }

    bool spend() {
        ++nodes_;
        if (budget_ != 0 && nodes_ > budget_) {
            budget_hit_ = true;
            return false;
        }
        return true;
    }

    void fail_at(Col col) { deepest_fail_ = std::max(deepest_fail_, col); }

    bool column_pairwise_distinct(int upto_row) const {
        for (int a = 1; a <= upto_row; ++a)
            for (int b = a + 1; b <= upto_row; ++b)
                if (prefix_[static_cast<std::size_t>(a - 1)] ==
                    prefix_[static_cast<std::size_t>(b - 1)])
                    return false;
        return true;
    }

    bool place(Col col, int row) {
        if (row > inst_.k) {
            if (!column_pairwise_distinct(inst_.k)) {
                fail_at(col);
                return false;
            }
            if (col == horizon_) {
                reached_tail_ = true;
                return tail_phase(1);
            }
            return place(col + 1, 1);
        }
        auto& row_entries = entries_[static_cast<std::size_t>(row - 1)];
        auto& row_prefix = prefix_[static_cast<std::size_t>(row - 1)];
        bool attempted = false;
        for (Value v : inst_.column_set(row, col)) {
            if (!allowed(v)) continue;
            attempted = true;
            if (!spend()) return false;
            if (violates_rule2(row, col, v)) {
                fail_at(col);
                continue;
            }
            row_entries.push_back(v);
            const bool inserted = row_prefix.insert(v).second;
            if (place(col, row + 1)) return true;
            row_entries.pop_back();
            if (inserted) row_prefix.erase(v);
            if (budget_hit_) return false;
        }
        if (!attempted) fail_at(col);
        return false;
    }

    bool violates_rule2(int row, Col col, Value v) const {
        const auto& row_entries = entries_[static_cast<std::size_t>(row - 1)];
        if (col <= inst_.n) {
            // (2a): distinct inside the block; earlier block entries are the
            // row's whole materialized prefix here.
            for (Value w : row_entries)
                if (w == v) return true;
        } else {
            // (2b): avoid the first n-1 entries.
            for (int p = 0; p < inst_.n - 1; ++p)
                if (row_entries[static_cast<std::size_t>(p)] == v) return true;
        }
        return false;
    }

    bool tail_phase(int row) {
        if (row > inst_.k) return true;
        auto& row_prefix = prefix_[static_cast<std::size_t>(row - 1)];
        const auto& row_entries = entries_[static_cast<std::size_t>(row - 1)];
        for (Value v : inst_.tails[static_cast<std::size_t>(row - 1)]) {
            if (!allowed(v)) continue;
            if (!spend()) return false;
            bool head_hit = false;
            for (int p = 0; p < inst_.n - 1; ++p)
                if (row_entries[static_cast<std::size_t>(p)] == v) {
                    head_hit = true;
                    break;
                }
            if (head_hit) continue;
            const bool inserted = row_prefix.insert(v).second;
            // Stabilized prefix sets must stay pairwise distinct; rows above
            // this one already hold their tail value.
            bool distinct = true;
            for (int b = 1; b < row; ++b)
                if (prefix_[static_cast<std::size_t>(b - 1)] == row_prefix) {
                    distinct = false;
                    break;
                }
            if (distinct) {
                tails_[static_cast<std::size_t>(row - 1)] = v;
                if (tail_phase(row + 1)) return true;
            }
            if (inserted) row_prefix.erase(v);
            if (budget_hit_) return false;
        }
        return false;
    }

    const Instance& inst_;
    const Col horizon_;
    const std::uint64_t budget_;
    const ValueSet& universe_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    bool reached_tail_ = false;
    Col deepest_fail_ = 0;
    std::vector<std::vector<Value>> entries_;
    std::vector<std::set<Value>> prefix_;
    std::vector<Value> tails_;
};

}  // namespace

OracleOutcome brute_force(const Instance& inst, const OracleConfig& cfg) {
    validate(inst);
    const Col horizon = cfg.horizon == 0 ? inst.horizon : cfg.horizon;
    if (horizon < inst.horizon)
        throw std::invalid_argument("brute_force: horizon below instance horizon");
    // The search recurses once per cell; cap the depth well below any usable
    // problem size.
    if (horizon * inst.k > 20000)
        throw std::invalid_argument("brute_force: horizon too large for exhaustive search");
    if (!cfg.universe.empty() && !is_canonical_set(cfg.universe))
        throw std::invalid_argument("brute_force: universe must be sorted without duplicates");
    Searcher searcher(inst, horizon, cfg.node_budget, cfg.universe);
    return searcher.run();
}

Instance hard_instance(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("hard_instance: n, k must be >= 1");
    if (k > n) throw std::invalid_argument("hard_instance: requires k <= n");
    ValueSet full(static_cast<std::size_t>(k));
    std::iota(full.begin(), full.end(), Value{1});
    Instance inst;
    inst.n = n;
    inst.k = k;
    inst.horizon = n;
    inst.sets.assign(static_cast<std::size_t>(k),
                     std::vector<ValueSet>(static_cast<std::size_t>(n), full));
    inst.tails.assign(static_cast<std::size_t>(k), full);
    return inst;
}

Instance gen_instance(const GenConfig& cfg) {
    if (cfg.n < 1 || cfg.k < 1) throw std::invalid_argument("gen_instance: n, k must be >= 1");
    if (cfg.cols < cfg.n) throw std::invalid_argument("gen_instance: cols below n");
    if (cfg.universe < cfg.k)
        throw std::invalid_argument("gen_instance: universe smaller than k");
    SplitMix64 rng(cfg.seed);
    Instance inst;
    inst.n = cfg.n;
    inst.k = cfg.k;
    inst.horizon = cfg.cols;
    // Draw order is the file order: per row, the column sets then the tail.
    for (int i = 0; i < cfg.k; ++i) {
        std::vector<ValueSet> row;
        row.reserve(static_cast<std::size_t>(cfg.cols));
        for (Col j = 0; j < cfg.cols; ++j)
            row.push_back(sample_subset(rng, cfg.universe, cfg.k));
        inst.sets.push_back(std::move(row));
        inst.tails.push_back(sample_subset(rng, cfg.universe, cfg.k));
    }
    return inst;
}

std::string SearchSummary::render() const {
    std::ostringstream os;
    os << "searched=" << searched << " solved=" << solved << " unknown=" << unknown
       << " infeasible=" << infeasible;
    return os.str();
}

SearchSummary conjecture_search(const SearchConfig& cfg) {
    if (cfg.count < 0) throw std::invalid_argument("conjecture_search: negative count");
    if (cfg.n < 1 || cfg.k < 1)
        throw std::invalid_argument("conjecture_search: n, k must be >= 1");
    if (cfg.universe < cfg.k)
        throw std::invalid_argument("conjecture_search: universe smaller than k");
    const Col gen_cols = cfg.n;
    const Col horizon = cfg.horizon == 0 ? gen_cols : cfg.horizon;
    if (horizon < gen_cols)
        throw std::invalid_argument("conjecture_search: horizon below n");
    const int threads = std::max(1, cfg.threads);

    std::vector<OracleOutcome::Kind> kinds(static_cast<std::size_t>(cfg.count));
    std::vector<std::optional<Instance>> bad(static_cast<std::size_t>(cfg.count));

    auto run_range = [&](int lo, int hi) {
        for (int idx = lo; idx < hi; ++idx) {
            GenConfig gc{cfg.base_seed + static_cast<std::uint64_t>(idx), cfg.n, cfg.k,
                         gen_cols, cfg.universe};
            const Instance inst = gen_instance(gc);
            OracleConfig oc;
            oc.horizon = horizon;
            oc.node_budget = cfg.node_budget;
            const OracleOutcome out = brute_force(inst, oc);
            kinds[static_cast<std::size_t>(idx)] = out.kind;
            if (out.kind == OracleOutcome::Kind::Infeasible)
                bad[static_cast<std::size_t>(idx)] = inst;
        }
    };

    if (threads == 1 || cfg.count <= 1) {
        run_range(0, cfg.count);
    } else {
        const int workers = std::min(threads, cfg.count);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const int chunk = (cfg.count + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int lo = w * chunk;
            const int hi = std::min(cfg.count, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    SearchSummary summary;
    summary.searched = cfg.count;
    for (int idx = 0; idx < cfg.count; ++idx) {
        switch (kinds[static_cast<std::size_t>(idx)]) {
            case OracleOutcome::Kind::Solution: ++summary.solved; break;
            case OracleOutcome::Kind::Unknown: ++summary.unknown; break;
            case OracleOutcome::Kind::Infeasible:
                ++summary.infeasible;
                summary.counterexamples.emplace_back(
                    cfg.base_seed + static_cast<std::uint64_t>(idx),
                    *bad[static_cast<std::size_t>(idx)]);
                break;
        }
    }
    return summary;
}

}  // namespace gridfill
