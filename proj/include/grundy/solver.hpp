#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "grundy/engine.hpp"
#include "grundy/graph.hpp"

namespace grundy {

// Exact search is exponential, so it gets a tighter cap than the graph type.
inline constexpr int kMaxSolveVertices = 32;
inline constexpr int kMaxOracleVertices = 9;

struct SolveOptions {
    bool memo_enabled = true;
    // Subset memoization only below this order; beyond it, pure DFS with
    // pruning (the table would dwarf the graph).
    int memo_cap = 24;
    // Cap on DFS node entries. Exhausting it yields a budget outcome carrying
    // the best lower bound found, never a silent non-answer.
    std::optional<std::uint64_t> node_budget;
    // Stop as soon as the incumbent reaches the minimum-degree ceiling
    // (applies to the l and total variants; classic always ceils at n).
    bool use_delta_bound_pruning = true;
};

enum class Outcome { exact, budget_exhausted };

struct SolveResult {
    Outcome outcome = Outcome::exact;
    int value = 0;             // exact maximum, or the best lower bound on budget
    std::vector<int> witness;  // valid sequence of length value
    std::uint64_t nodes_explored = 0;
    std::uint64_t memo_hits = 0;
    std::uint64_t pruned = 0;
    double elapsed_ms = 0.0;
    bool exact() const { return outcome == Outcome::exact; }
};

// A solver self-check failed: it produced a witness its own engine rejects,
// or a value past a proven ceiling. Always a bug here, never bad input.
struct InternalCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

SolveResult solve(const Graph& g, Variant variant, const SolveOptions& opts = {});

// Answers the same question by a different route: plain recursion over the
// adjacency rows, no memo, no bounds, no pruning beyond step validity. Kept
// deliberately independent of solve() so the two can cross-check each other.
int brute_oracle(const Graph& g, Variant variant);

// Repeatedly appends the candidate with the largest fresh set (ties: lowest
// index). Returns a real sequence, so its length bounds solve from below.
std::vector<int> greedy_bound(const Graph& g, Variant variant);

// Proven ceiling: n - min_degree + 1 for l and total when min_degree >= 1,
// otherwise n. Lets the search stop the moment the incumbent reaches it.
int upper_bound(const Graph& g, Variant variant);

}  // namespace grundy
