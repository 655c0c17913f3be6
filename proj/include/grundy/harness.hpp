#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/solver.hpp"

namespace grundy {

enum class Verdict { pass, fail, inconclusive };

std::string verdict_name(Verdict v);

// One checked claim on one graph. A fail report carries the counterexample
// (graph6 plus the offending values), so re-running the check on graph_id
// reproduces the verdict from the record alone.
struct TheoremReport {
    std::string theorem_id;
    std::string graph_id;  // graph6; empty for corpus-level aggregates
    std::string expected;  // the relation that was checked
    std::string observed;  // measured values, or the counterexample detail
    Verdict verdict = Verdict::inconclusive;
    double elapsed_ms = 0.0;
};

// A measured deletion delta outside its proved range contradicts a theorem
// the solver itself enforces, so it can only mean an implementation bug.
// It aborts the run instead of becoming a report.
class TheoremViolation : public std::logic_error {
    using std::logic_error::logic_error;
};

// Value changes over all single deletions, as a set.
std::set<int> edge_removal_deltas(const Graph& g, const SolveOptions& opts = {});
std::set<int> vertex_removal_deltas(const Graph& g, const SolveOptions& opts = {});

// Per-graph checks. Budget exhaustion in any underlying solve yields an
// inconclusive verdict, never a pass.
TheoremReport check_delta_bound(const Graph& g, const SolveOptions& opts = {});
TheoremReport check_edge_removal(const Graph& g, const SolveOptions& opts = {});
TheoremReport check_vertex_removal(const Graph& g, const SolveOptions& opts = {});
TheoremReport check_k_edge_deltas(const Graph& g, int k, std::uint64_t seed = 42,
                                  const SolveOptions& opts = {});
TheoremReport check_complete_characterization(const Graph& g,
                                              const SolveOptions& opts = {});
TheoremReport check_triple_twin(const Graph& g, const SolveOptions& opts = {});
TheoremReport check_full_implies_leaf(const Graph& g,
                                      const SolveOptions& opts = {});
TheoremReport check_induced_monotone(const Graph& g, std::uint64_t seed = 42,
                                     const SolveOptions& opts = {});

// Self-contained corpus check: fixed landmarks plus seeded random forests,
// all expected to reach full length.
TheoremReport check_forest_full(std::uint64_t seed = 42);

struct SweepSummaryRow {
    std::string theorem_id;
    std::uint64_t graphs_checked = 0;
    std::uint64_t passes = 0;
    std::uint64_t fails = 0;
    std::uint64_t inconclusive = 0;
};

struct SweepResult {
    std::vector<SweepSummaryRow> summary;   // one row per check run
    std::vector<TheoremReport> reports;     // non-pass reports, input order
    std::uint64_t graphs_enumerated = 0;
    bool halted = false;  // stopped at the first fail; counts end there
};

// Every labeled graph on n vertices through every per-graph check above
// (complete-characterization only where its precondition holds). `only`
// restricts to the named theorem_ids. Workers split the enumeration into
// fixed chunks; reports merge in enumeration order regardless of timing.
SweepResult exhaustive_sweep(int n, int workers = 1,
                             const std::vector<std::string>& only = {});

// Random-graph corpus (p in {0.2, 0.5, 0.8}, n in 7..12, 100 per cell) for
// the cheap per-graph checks, plus dedicated seeded corpora for the
// k-edge-delta, induced-subgraph, and forest checks.
struct CorpusOptions {
    std::uint64_t seed = 42;
    int workers = 1;
};
SweepResult random_corpus_sweep(const CorpusOptions& opts = {});

enum class DeltaTarget { edge_deltas, vertex_deltas };

std::string delta_target_name(DeltaTarget t);
DeltaTarget delta_target_from_name(const std::string& name);

struct SearchOptions {
    std::uint64_t seed = 42;
    int steps = 5000;    // proposals per restart
    int restarts = 20;
    int min_n = 4;       // restart order range, cycled across restarts
    int max_n = 8;
};

struct SearchState {
    Graph current;                 // best graph found
    std::set<int> realized_deltas; // its single-deletion deltas
    int score = 0;                 // = realized_deltas.size()
    std::uint64_t rng_seed = 0;
    std::uint64_t step_count = 0;
};

// Hill-climb over single edge flips for graphs realizing many distinct
// deletion deltas. Finds witnesses only; never claims nonexistence. An
// out-of-range delta anywhere raises TheoremViolation.
SearchState extremal_search(DeltaTarget target, const SearchOptions& opts = {},
                            const std::optional<Graph>& seed_graph = std::nullopt);

std::string report_to_json(const TheoremReport& r);
std::string summary_to_csv(const std::vector<SweepSummaryRow>& rows);

}  // namespace grundy
