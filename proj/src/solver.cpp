#include "grundy/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>
#include <unordered_map>
#include <utility>

namespace grundy {

namespace {

std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

// DFS over chosen-subsets. The blocked and candidate sets are functions of the
// chosen SET alone (blocked is a plain union), so the memo key is the subset
// and its value the exact best extension length from there.
//
// Soundness with pruning: any cut (incumbent cut, ceiling stop, budget stop)
// taints the value computed for the enclosing nodes, and tainted values are
// never memoized. Tainted values are still genuine lower bounds, since every
// value returned from anywhere is the length of some explored extension. So
// the memo holds only exact entries, and memo-on runs agree with memo-off.
//
// The incumbent is updated on node entry. That also covers memo hits: when a
// subset's exact value was first stored, the search had physically walked an
// extension of that length, so the incumbent already accounts for it.
struct Searcher {
    const Graph& g;
    Variant variant;
    int n;
    bool memo_on;
    std::optional<std::uint64_t> budget;
    int ceiling;

    std::unordered_map<std::uint64_t, int> memo;
    std::vector<int> path;
    std::vector<int> best_path;
    int best = 0;
    std::uint64_t nodes = 0, memo_hits = 0, pruned = 0;
    bool out_of_budget = false;
    bool proven = false;

    Searcher(const Graph& g_, Variant variant_, const SolveOptions& opts)
        : g(g_),
          variant(variant_),
          n(g_.order()),
          memo_on(opts.memo_enabled && g_.order() <= opts.memo_cap),
          budget(opts.node_budget),
          ceiling(opts.use_delta_bound_pruning ? upper_bound(g_, variant_)
                                               : g_.order()) {}

    // Returns the best extension length found below this subset and whether
    // that number is exact.
    std::pair<int, bool> dfs(std::uint64_t chosen, std::uint64_t blocked,
                             std::uint64_t cand) {
        ++nodes;
        if (budget && nodes > *budget) {
            out_of_budget = true;
            return {0, false};
        }
        if (int(path.size()) > best) {
            best = int(path.size());
            best_path = path;
        }
        if (best == ceiling) {
            proven = true;
            return {0, false};
        }
        if (memo_on) {
            auto it = memo.find(chosen);
            if (it != memo.end()) {
                ++memo_hits;
                return {it->second, true};
            }
        }
        if (int(path.size()) + std::popcount(cand) <= best) {
            ++pruned;
            return {0, false};
        }

        int best_ext = 0;
        bool exact = true;
        for (std::uint64_t m = cand; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const std::uint64_t next_blocked =
                blocked | accumulation_set(g, variant, v);
            // candidates only die, never revive, so filter the current mask
            std::uint64_t next_cand = 0;
            for (std::uint64_t m2 = cand & ~bit(v); m2; m2 &= m2 - 1) {
                const int u = std::countr_zero(m2);
                if (coverage_set(g, variant, u) & ~next_blocked)
                    next_cand |= bit(u);
            }
            path.push_back(v);
            auto [ext, child_exact] = dfs(chosen | bit(v), next_blocked, next_cand);
            path.pop_back();
            best_ext = std::max(best_ext, 1 + ext);
            exact = exact && child_exact;
            if (proven || out_of_budget) return {best_ext, false};
        }
        if (exact && memo_on) memo.emplace(chosen, best_ext);
        return {best_ext, exact};
    }
};

int oracle_step(const Graph& g, Variant variant, std::uint64_t chosen,
                std::uint64_t blocked) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (chosen >> v & 1) continue;
        const std::uint64_t cover = variant == Variant::total
                                        ? g.open_neighborhood(v)
                                        : g.closed_neighborhood(v);
        if ((cover & ~blocked) == 0) continue;
        const std::uint64_t acc = variant == Variant::classic
                                      ? g.closed_neighborhood(v)
                                      : g.open_neighborhood(v);
        best = std::max(
            best, 1 + oracle_step(g, variant, chosen | bit(v), blocked | acc));
    }
    return best;
}

}  // namespace

SolveResult solve(const Graph& g, Variant variant, const SolveOptions& opts) {
    if (g.order() < 1)
        throw std::invalid_argument("solve: graph must have at least one vertex");
    if (g.order() > kMaxSolveVertices)
        throw std::invalid_argument("solve: order " + std::to_string(g.order()) +
                                    " exceeds the solver cap of " +
                                    std::to_string(kMaxSolveVertices));
    if (opts.memo_cap < 0 || opts.memo_cap > kMaxVertices)
        throw std::invalid_argument("solve: memo_cap out of range");
    const auto t0 = std::chrono::steady_clock::now();

    Searcher s(g, variant, opts);
    s.best_path = greedy_bound(g, variant);
    s.best = int(s.best_path.size());

    if (s.best < s.ceiling) {
        std::uint64_t cand0 = 0;
        for (int v = 0; v < g.order(); ++v)
            if (coverage_set(g, variant, v) != 0) cand0 |= bit(v);
        s.dfs(0, 0, cand0);
    }

    SolveResult r;
    r.value = s.best;
    r.witness = s.best_path;
    r.nodes_explored = s.nodes;
    r.memo_hits = s.memo_hits;
    r.pruned = s.pruned;
    r.outcome = s.out_of_budget && !s.proven ? Outcome::budget_exhausted
                                             : Outcome::exact;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();

    // Self-checks: the witness must satisfy our own engine, and the value must
    // respect the proven ceilings (for l/total, n - min_degree + 1 holds
    // whether or not the search pruned with it).
    const ValidationResult check = validate_sequence(g, variant, r.witness);
    if (!check.ok || int(r.witness.size()) != r.value)
        throw InternalCheckError("solve: witness fails its own validation");
    int hard_ceiling = g.order();
    if (variant != Variant::classic && g.min_degree() >= 1)
        hard_ceiling = g.order() - g.min_degree() + 1;
    if (r.value > hard_ceiling)
        throw InternalCheckError("solve: value exceeds the proven ceiling");
    return r;
}

int brute_oracle(const Graph& g, Variant variant) {
    if (g.order() > kMaxOracleVertices)
        throw std::invalid_argument("brute_oracle: order " +
                                    std::to_string(g.order()) +
                                    " exceeds the oracle cap of " +
                                    std::to_string(kMaxOracleVertices));
    return oracle_step(g, variant, 0, 0);
}

std::vector<int> greedy_bound(const Graph& g, Variant variant) {
    if (g.order() < 1)
        throw std::invalid_argument("greedy_bound: graph must have at least one vertex");
    SequenceState s;
    for (;;) {
        int pick = -1;
        int pick_gain = 0;
        for (int v = 0; v < g.order(); ++v) {
            if (s.chosen_mask >> v & 1) continue;
            const int gain =
                std::popcount(coverage_set(g, variant, v) & ~s.blocked);
            if (gain > pick_gain) {
                pick_gain = gain;
                pick = v;
            }
        }
        if (pick < 0) break;
        append_step(g, variant, s, pick);
    }
    return s.chosen;
}

int upper_bound(const Graph& g, Variant variant) {
    if (g.order() < 1)
        throw std::invalid_argument("upper_bound: graph must have at least one vertex");
    if (variant == Variant::classic) return g.order();
    const int delta = g.min_degree();
    return delta >= 1 ? g.order() - delta + 1 : g.order();
}

}  // namespace grundy
