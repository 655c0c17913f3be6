#include "grundy/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <utility>

#include <json.hpp>

#include "grundy/graph6.hpp"

namespace grundy {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 =
        std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

TheoremReport stamp(TheoremReport rep, const Timer& t) {
    rep.elapsed_ms = t.ms();
    return rep;
}

std::optional<SolveResult> try_solve(const Graph& g, const SolveOptions& opts) {
    SolveResult r = solve(g, Variant::l, opts);
    if (!r.exact()) return std::nullopt;
    return r;
}

std::string format_set(const std::set<int>& s) {
    std::string out = "{";
    for (int x : s) {
        if (out.size() > 1) out += ",";
        out += std::to_string(x);
    }
    return out + "}";
}

std::string edge_name(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    throw std::invalid_argument("verdict_name: unknown verdict");
}

std::set<int> edge_removal_deltas(const Graph& g, const SolveOptions& opts) {
    SolveResult base = solve(g, Variant::l, opts);
    if (!base.exact())
        throw std::runtime_error("edge_removal_deltas: needs exact solves");
    std::set<int> deltas;
    for (auto [u, v] : g.edges()) {
        SolveResult r = solve(g.remove_edge(u, v), Variant::l, opts);
        if (!r.exact())
            throw std::runtime_error("edge_removal_deltas: needs exact solves");
        deltas.insert(r.value - base.value);
    }
    return deltas;
}

std::set<int> vertex_removal_deltas(const Graph& g, const SolveOptions& opts) {
    SolveResult base = solve(g, Variant::l, opts);
    if (!base.exact())
        throw std::runtime_error("vertex_removal_deltas: needs exact solves");
    std::set<int> deltas;
    for (int u = 0; u < g.order(); ++u) {
        Graph rest = g.remove_vertex(u);
        int value = 0;
        if (rest.order() > 0) {
            SolveResult r = solve(rest, Variant::l, opts);
            if (!r.exact())
                throw std::runtime_error(
                    "vertex_removal_deltas: needs exact solves");
            value = r.value;
        }
        deltas.insert(value - base.value);
    }
    return deltas;
}

TheoremReport check_delta_bound(const Graph& g, const SolveOptions& opts) {
    Timer t;
    TheoremReport rep;
    rep.theorem_id = "delta-bound";
    rep.graph_id = to_graph6(g);
    rep.expected = "gamma <= n - delta + 1 whenever delta >= 1";
    SolveOptions o = opts;
    o.use_delta_bound_pruning = false;  // the claim under test must not steer the solver
    try {
        SolveResult r = solve(g, Variant::l, o);
        if (!r.exact()) {
            rep.verdict = Verdict::inconclusive;
            rep.observed = "node budget exhausted";
            return stamp(rep, t);
        }
        int d = g.min_degree();
        rep.observed = "n=" + std::to_string(g.order()) +
                       " delta=" + std::to_string(d) +
                       " gamma=" + std::to_string(r.value);
        rep.verdict = (d == 0 || r.value <= g.order() - d + 1)
                          ? Verdict::pass
                          : Verdict::fail;
    } catch (const InternalCheckError& e) {
        // the solver hard-asserts this same ceiling, so a violation
        // surfaces as its internal check tripping
        rep.verdict = Verdict::fail;
        rep.observed = e.what();
    }
    return stamp(rep, t);
}

TheoremReport check_edge_removal(const Graph& g, const SolveOptions& opts) {
    Timer t;
    TheoremReport rep;
    rep.theorem_id = "edge-removal";
    rep.graph_id = to_graph6(g);
    rep.expected = "-1 <= gamma(g-e) - gamma(g) <= +2 for every edge";
    auto base = try_solve(g, opts);
    if (!base) {
        rep.verdict = Verdict::inconclusive;
        rep.observed = "node budget exhausted";
        return stamp(rep, t);
    }
    std::set<int> deltas;
    for (auto [u, v] : g.edges()) {
        auto r = try_solve(g.remove_edge(u, v), opts);
        if (!r) {
            rep.verdict = Verdict::inconclusive;
            rep.observed = "node budget exhausted at edge " + edge_name(u, v);
            return stamp(rep, t);
        }
        int delta = r->value - base->value;
        if (delta < -1 || delta > 2) {
            rep.verdict = Verdict::fail;
            rep.observed = "edge " + edge_name(u, v) + ": gamma " +
                           std::to_string(base->value) + " -> " +
                           std::to_string(r->value);
            return stamp(rep, t);
        }
        deltas.insert(delta);
    }
    rep.verdict = Verdict::pass;
    rep.observed = g.edge_count() == 0
                       ? "no edges, vacuous"
                       : "gamma=" + std::to_string(base->value) + " deltas " +
                             format_set(deltas);
    return stamp(rep, t);
}

TheoremReport check_vertex_removal(const Graph& g, const SolveOptions& opts) {
    Timer t;
    TheoremReport rep;
    rep.theorem_id = "vertex-removal";
    rep.graph_id = to_graph6(g);
    rep.expected = "-2 <= gamma(g-u) - gamma(g) <= 0 for every vertex";
    auto base = try_solve(g, opts);
    if (!base) {
        rep.verdict = Verdict::inconclusive;
        rep.observed = "node budget exhausted";
        return stamp(rep, t);
    }
    std::set<int> deltas;
    for (int u = 0; u < g.order(); ++u) {
        Graph rest = g.remove_vertex(u);
        int value = 0;
        if (rest.order() > 0) {
            auto r = try_solve(rest, opts);
            if (!r) {
                rep.verdict = Verdict::inconclusive;
                rep.observed =
                    "node budget exhausted at vertex " + std::to_string(u);
                return stamp(rep, t);
            }
            value = r->value;
        }
        int delta = value - base->value;
        if (delta < -2 || delta > 0) {
            rep.verdict = Verdict::fail;
            rep.observed = "vertex " + std::to_string(u) + ": gamma " +
                           std::to_string(base->value) + " -> " +
                           std::to_string(value);
            return stamp(rep, t);
        }
        deltas.insert(delta);
    }
    rep.verdict = Verdict::pass;
    rep.observed = "gamma=" + std::to_string(base->value) + " deltas " +
                   format_set(deltas);
    return stamp(rep, t);
}

TheoremReport check_k_edge_deltas(const Graph& g, int k, std::uint64_t seed,
                                  const SolveOptions& opts) {
    if (k < 1) throw std::invalid_argument("check_k_edge_deltas: need k >= 1");
    Timer t;
    TheoremReport rep;
    rep.theorem_id = "k-edge-deltas";
    rep.graph_id = to_graph6(g);
    rep.expected = "-k <= gamma(g - k edges) - gamma(g) <= +2k, k=" +
                   std::to_string(k);
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m < k) {
        rep.verdict = Verdict::pass;
        rep.observed = "only " + std::to_string(m) + " edges, vacuous";
        return stamp(rep, t);
    }
    auto base = try_solve(g, opts);
    if (!base) {
        rep.verdict = Verdict::inconclusive;
        rep.observed = "node budget exhausted";
        return stamp(rep, t);
    }
    std::mt19937_64 rng(seed);
    std::set<int> deltas;
    const int samples = 20;
    for (int s = 0; s < samples; ++s) {
        std::vector<int> idx(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
        Graph h = g;
        for (int j = 0; j < k; ++j) {
            std::swap(idx[size_t(j)],
                      idx[size_t(j) + rng() % std::uint64_t(m - j)]);
            auto [u, v] = edges[size_t(idx[size_t(j)])];
            h = h.remove_edge(u, v);
        }
        auto r = try_solve(h, opts);
        if (!r) {
            rep.verdict = Verdict::inconclusive;
            rep.observed = "node budget exhausted on a removal sample";
            return stamp(rep, t);
        }
        int delta = r->value - base->value;
        if (delta < -k || delta > 2 * k) {
            rep.verdict = Verdict::fail;
            rep.observed = "removed " + std::to_string(k) + " edges: gamma " +
                           std::to_string(base->value) + " -> " +
                           std::to_string(r->value) + " (" + to_graph6(h) + ")";
            return stamp(rep, t);
        }
        deltas.insert(delta);
    }
    rep.verdict = Verdict::pass;
    rep.observed = std::to_string(samples) + " samples, deltas " +
                   format_set(deltas);
    return stamp(rep, t);
}

TheoremReport check_complete_characterization(const Graph& g,
                                              const SolveOptions& opts) {
    Timer t;
    TheoremReport rep;
    rep.theorem_id = "complete-characterization";
    rep.graph_id = to_graph6(g);
    rep.expected = "gamma = 2 iff complete; a value-2 witness pair is adjacent";
    if (g.order() < 3 || !g.is_connected()) {
        rep.verdict = Verdict::inconclusive;
        rep.observed = "requires a connected graph on >= 3 vertices";
        return stamp(rep, t);
    }
    auto r = try_solve(g, opts);
    if (!r) {
        rep.verdict = Verdict::inconclusive;
        rep.observed = "node budget exhausted";
        return stamp(rep, t);
    }
    bool complete = g.is_complete();
    rep.observed = "gamma=" + std::to_string(r->value) +
                   (complete ? ", complete" : ", not complete");
    if ((r->value == 2) != complete) {
        rep.verdict = Verdict::fail;
        return stamp(rep, t);
    }
    if (r->value == 2 && !g.has_edge(r->witness[0], r->witness[1])) {
        rep.verdict = Verdict::fail;
        rep.observed += ", witness pair not adjacent";
        return stamp(rep, t);
    }
    rep.verdict = Verdict::pass;
    return stamp(rep, t);
}

TheoremReport check_triple_twin(const Graph& g, const SolveOptions& opts) {
    Timer t;
    TheoremReport rep;
    rep.theorem_id = "triple-twin";
    rep.graph_id = to_graph6(g);
    rep.expected =
        "three pairwise-adjacent vertices sharing a closed neighborhood "
        "force gamma < n";
    // Adjacent vertices can only be twins through closed neighborhoods
    // (open equality would put a vertex in its own neighborhood), so the
    // closed form is the one that can ever fire.
    int a = -1, b = -1, c = -1;
    const int n = g.order();
    for (int i = 0; i < n && a < 0; ++i)
        for (int j = i + 1; j < n && a < 0; ++j) {
            if (!g.has_edge(i, j) ||
                g.closed_neighborhood(i) != g.closed_neighborhood(j))
                continue;
            for (int l = j + 1; l < n && a < 0; ++l)
                if (g.has_edge(i, l) &&
                    g.closed_neighborhood(i) == g.closed_neighborhood(l)) {
                    a = i;
                    b = j;
                    c = l;
                }
        }
    if (a < 0) {
        rep.verdict = Verdict::pass;
        rep.observed = "no qualifying triple";
        return stamp(rep, t);
    }
    auto r = try_solve(g, opts);
    if (!r) {
        rep.verdict = Verdict::inconclusive;
        rep.observed = "node budget exhausted";
        return stamp(rep, t);
    }
    rep.observed = "triple (" + std::to_string(a) + "," + std::to_string(b) +
                   "," + std::to_string(c) + "), gamma=" +
                   std::to_string(r->value) + ", n=" + std::to_string(n);
    rep.verdict = r->value != n ? Verdict::pass : Verdict::fail;
    return stamp(rep, t);
}

TheoremReport check_full_implies_leaf(const Graph& g,
                                      const SolveOptions& opts) {
    Timer t;
    TheoremReport rep;
    rep.theorem_id = "full-implies-leaf";
    rep.graph_id = to_graph6(g);
    rep.expected = "gamma = n forces a vertex of degree <= 1";
    auto r = try_solve(g, opts);
    if (!r) {
        rep.verdict = Verdict::inconclusive;
        rep.observed = "node budget exhausted";
        return stamp(rep, t);
    }
    rep.observed = "gamma=" + std::to_string(r->value) +
                   " delta=" + std::to_string(g.min_degree());
    rep.verdict = (r->value != g.order() || g.min_degree() <= 1)
                      ? Verdict::pass
                      : Verdict::fail;
    return stamp(rep, t);
}

TheoremReport check_induced_monotone(const Graph& g, std::uint64_t seed,
                                     const SolveOptions& opts) {
    Timer t;
    TheoremReport rep;
    rep.theorem_id = "induced-monotone";
    rep.graph_id = to_graph6(g);
    rep.expected = "gamma(induced subgraph) <= gamma(g)";
    if (g.order() < 2) {
        rep.verdict = Verdict::pass;
        rep.observed = "no proper nonempty induced subgraph";
        return stamp(rep, t);
    }
    auto base = try_solve(g, opts);
    if (!base) {
        rep.verdict = Verdict::inconclusive;
        rep.observed = "node budget exhausted";
        return stamp(rep, t);
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < 10; ++s) {
        std::uint64_t keep = 0;
        do {
            keep = rng() & g.vertex_mask();
        } while (keep == 0 || keep == g.vertex_mask());
        auto r = try_solve(g.induced(keep), opts);
        if (!r) {
            rep.verdict = Verdict::inconclusive;
            rep.observed = "node budget exhausted on a subgraph";
            return stamp(rep, t);
        }
        if (r->value > base->value) {
            rep.verdict = Verdict::fail;
            rep.observed = "keep mask " + std::to_string(keep) + ": gamma " +
                           std::to_string(r->value) + " > " +
                           std::to_string(base->value);
            return stamp(rep, t);
        }
    }
    rep.verdict = Verdict::pass;
    rep.observed = "10 induced samples, gamma=" + std::to_string(base->value);
    return stamp(rep, t);
}

TheoremReport check_forest_full(std::uint64_t seed) {
    Timer t;
    TheoremReport rep;
    rep.theorem_id = "forest-full";
    rep.expected = "gamma = n on every forest";
    std::vector<Graph> corpus = {path_graph(12), complete_multipartite({1, 9})};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 50; ++i) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = random_tree(n, rng());
        if (i % 3 == 2) {
            // thin some trees into proper forests
            for (auto [u, v] : g.edges())
                if (rng() % 4 == 0) g = g.remove_edge(u, v);
        }
        corpus.push_back(std::move(g));
    }
    for (const Graph& g : corpus) {
        SolveResult r = solve(g, Variant::l);
        if (r.value != g.order()) {
            rep.graph_id = to_graph6(g);
            rep.verdict = Verdict::fail;
            rep.observed = "gamma=" + std::to_string(r.value) +
                           " on a forest of order " +
                           std::to_string(g.order());
            return stamp(rep, t);
        }
    }
    rep.verdict = Verdict::pass;
    rep.observed = std::to_string(corpus.size()) + " forests, all full length";
    return stamp(rep, t);
}

namespace {

const std::vector<std::string> kSweepChecks = {
    "delta-bound",    "full-implies-leaf", "triple-twin",
    "complete-characterization", "edge-removal", "vertex-removal",
};

// Per-graph result for the chunked runners: one verdict slot per check in
// play (-1 skipped, otherwise the Verdict), plus any non-pass reports.
struct GraphOutcome {
    std::vector<signed char> codes;
    std::vector<TheoremReport> nonpass;
};

GraphOutcome outcome_of(const Graph& g, const std::vector<std::string>& which) {
    GraphOutcome out;
    for (const std::string& id : which) {
        std::optional<TheoremReport> rep;
        if (id == "delta-bound") {
            rep = check_delta_bound(g);
        } else if (id == "full-implies-leaf") {
            rep = check_full_implies_leaf(g);
        } else if (id == "triple-twin") {
            rep = check_triple_twin(g);
        } else if (id == "complete-characterization") {
            if (g.order() >= 3 && g.is_connected())
                rep = check_complete_characterization(g);
        } else if (id == "edge-removal") {
            rep = check_edge_removal(g);
        } else if (id == "vertex-removal") {
            rep = check_vertex_removal(g);
        } else {
            throw std::invalid_argument("unknown check: " + id);
        }
        if (!rep) {
            out.codes.push_back(-1);
            continue;
        }
        out.codes.push_back(static_cast<signed char>(rep->verdict));
        if (rep->verdict != Verdict::pass) out.nonpass.push_back(*rep);
    }
    return out;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> es;
    int b = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
            if (mask >> b & 1) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

// Chunked map over graph indices 0..total-1 with deterministic merge:
// chunk boundaries are fixed, results are consumed in index order, and the
// run halts at the first fail no matter how many workers raced ahead.
SweepResult run_chunked(std::uint64_t total, int workers, std::uint64_t chunk,
                        const std::vector<std::string>& which,
                        const std::function<GraphOutcome(std::uint64_t)>& fn) {
    SweepResult res;
    for (const std::string& id : which)
        res.summary.push_back(SweepSummaryRow{id, 0, 0, 0, 0});

    auto process = [&fn](std::uint64_t lo,
                         std::uint64_t hi) -> std::vector<GraphOutcome> {
        std::vector<GraphOutcome> out;
        out.reserve(hi - lo);
        for (std::uint64_t i = lo; i < hi; ++i) out.push_back(fn(i));
        return out;
    };

    auto absorb = [&](const GraphOutcome& o) -> bool {
        ++res.graphs_enumerated;
        bool failed = false;
        for (size_t i = 0; i < o.codes.size(); ++i) {
            if (o.codes[i] < 0) continue;
            SweepSummaryRow& row = res.summary[i];
            ++row.graphs_checked;
            Verdict v = static_cast<Verdict>(o.codes[i]);
            if (v == Verdict::pass) ++row.passes;
            if (v == Verdict::fail) ++row.fails, failed = true;
            if (v == Verdict::inconclusive) ++row.inconclusive;
        }
        for (const TheoremReport& r : o.nonpass) res.reports.push_back(r);
        return failed;
    };

    std::uint64_t next = 0;
    bool stop = false;
    while (next < total && !stop) {
        std::vector<std::future<std::vector<GraphOutcome>>> wave;
        for (int w = 0; w < workers && next < total; ++w) {
            std::uint64_t lo = next;
            std::uint64_t hi = std::min(total, lo + chunk);
            next = hi;
            wave.push_back(
                std::async(std::launch::async, process, lo, hi));
        }
        for (auto& fut : wave) {
            std::vector<GraphOutcome> outcomes = fut.get();
            if (stop) continue;  // drain remaining futures after a halt
            for (const GraphOutcome& o : outcomes) {
                if (stop) break;
                if (absorb(o)) {
                    res.halted = true;
                    stop = true;
                }
            }
        }
    }
    return res;
}

void validate_check_names(const std::vector<std::string>& which) {
    for (const std::string& id : which)
        if (std::find(kSweepChecks.begin(), kSweepChecks.end(), id) ==
            kSweepChecks.end())
            throw std::invalid_argument("unknown check: " + id);
}

}  // namespace

SweepResult exhaustive_sweep(int n, int workers,
                             const std::vector<std::string>& only) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("exhaustive_sweep: need 1 <= n <= 6");
    if (workers < 1)
        throw std::invalid_argument("exhaustive_sweep: need workers >= 1");
    std::vector<std::string> which = only.empty() ? kSweepChecks : only;
    validate_check_names(which);
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    return run_chunked(total, workers, 1024, which, [n, &which](std::uint64_t mask) {
        return outcome_of(graph_from_mask(n, mask), which);
    });
}

SweepResult random_corpus_sweep(const CorpusOptions& opts) {
    if (opts.workers < 1)
        throw std::invalid_argument("random_corpus_sweep: need workers >= 1");
    const std::vector<std::string> cheap = {
        "delta-bound", "full-implies-leaf", "triple-twin",
        "complete-characterization"};
    std::vector<Graph> corpus;
    std::mt19937_64 rng(opts.seed);
    for (double p : {0.2, 0.5, 0.8})
        for (int n = 7; n <= 12; ++n)
            for (int i = 0; i < 100; ++i)
                corpus.push_back(random_graph(n, p, rng()));

    SweepResult res =
        run_chunked(corpus.size(), opts.workers, 64, cheap,
                    [&corpus, &cheap](std::uint64_t i) {
                        return outcome_of(corpus[i], cheap);
                    });
    if (res.halted) return res;

    // dedicated corpora for the sampled checks
    auto absorb = [&res](const TheoremReport& rep) {
        SweepSummaryRow* row = nullptr;
        for (SweepSummaryRow& r : res.summary)
            if (r.theorem_id == rep.theorem_id) row = &r;
        if (!row) {
            res.summary.push_back(SweepSummaryRow{rep.theorem_id, 0, 0, 0, 0});
            row = &res.summary.back();
        }
        ++row->graphs_checked;
        if (rep.verdict == Verdict::pass) ++row->passes;
        if (rep.verdict == Verdict::fail) ++row->fails, res.halted = true;
        if (rep.verdict == Verdict::inconclusive) ++row->inconclusive;
        if (rep.verdict != Verdict::pass) res.reports.push_back(rep);
        ++res.graphs_enumerated;
    };
    const double probs[] = {0.2, 0.5, 0.8};
    for (int i = 0; i < 50 && !res.halted; ++i) {
        int n = 3 + static_cast<int>(rng() % 8);
        int k = 1 + static_cast<int>(rng() % 3);
        absorb(check_k_edge_deltas(random_graph(n, probs[i % 3], rng()), k,
                                   rng()));
    }
    for (int i = 0; i < 100 && !res.halted; ++i) {
        int n = 3 + static_cast<int>(rng() % 8);
        absorb(check_induced_monotone(random_graph(n, probs[i % 3], rng()),
                                      rng()));
    }
    if (!res.halted) absorb(check_forest_full(opts.seed));
    return res;
}

std::string delta_target_name(DeltaTarget t) {
    return t == DeltaTarget::edge_deltas ? "edge-deltas" : "vertex-deltas";
}

DeltaTarget delta_target_from_name(const std::string& name) {
    if (name == "edge-deltas") return DeltaTarget::edge_deltas;
    if (name == "vertex-deltas") return DeltaTarget::vertex_deltas;
    throw std::invalid_argument("unknown search target: " + name);
}

namespace {

void enforce_delta_range(const std::set<int>& deltas, DeltaTarget target,
                         const Graph& g) {
    const int lo = target == DeltaTarget::edge_deltas ? -1 : -2;
    const int hi = target == DeltaTarget::edge_deltas ? 2 : 0;
    for (int d : deltas)
        if (d < lo || d > hi)
            throw TheoremViolation(
                "single-deletion delta " + std::to_string(d) + " outside [" +
                std::to_string(lo) + "," + std::to_string(hi) + "] on " +
                to_graph6(g));
}

}  // namespace

SearchState extremal_search(DeltaTarget target, const SearchOptions& opts,
                            const std::optional<Graph>& seed_graph) {
    if (opts.min_n < 2 || opts.max_n < opts.min_n ||
        opts.max_n > kMaxSolveVertices)
        throw std::invalid_argument("extremal_search: bad n range");
    if (opts.steps < 1 || opts.restarts < 1)
        throw std::invalid_argument("extremal_search: bad step counts");

    const int perfect =
        target == DeltaTarget::edge_deltas ? 4 : 3;  // whole allowed range hit
    std::mt19937_64 rng(opts.seed);
    SearchState st;
    st.rng_seed = opts.seed;
    bool seen = false;

    auto eval = [&](const Graph& g) {
        std::set<int> d = target == DeltaTarget::edge_deltas
                              ? edge_removal_deltas(g)
                              : vertex_removal_deltas(g);
        enforce_delta_range(d, target, g);
        return d;
    };
    auto consider = [&](const Graph& g, const std::set<int>& d) {
        int score = static_cast<int>(d.size());
        bool better = score > st.score ||
                      (score == st.score && g.order() < st.current.order());
        if (!seen || better) {
            st.current = g;
            st.realized_deltas = d;
            st.score = score;
            seen = true;
        }
    };

    const int span = opts.max_n - opts.min_n + 1;
    for (int restart = 0; restart < opts.restarts; ++restart) {
        Graph cur;
        if (restart == 0 && seed_graph) {
            cur = *seed_graph;
        } else {
            int n = opts.min_n + restart % span;
            cur = random_graph(n, 0.5, rng());
        }
        const int n = cur.order();
        std::set<int> cur_deltas = eval(cur);
        consider(cur, cur_deltas);
        for (int step = 0; step < opts.steps; ++step) {
            if (st.score == perfect) return st;
            ++st.step_count;
            int u = static_cast<int>(rng() % std::uint64_t(n));
            int v = static_cast<int>(rng() % std::uint64_t(n));
            if (u == v) continue;
            Graph next = cur.has_edge(u, v) ? cur.remove_edge(u, v)
                                            : cur.add_edge(u, v);
            std::set<int> next_deltas = eval(next);
            consider(next, next_deltas);
            if (next_deltas.size() >= cur_deltas.size()) {
                cur = std::move(next);  // sideways moves keep the walk alive
                cur_deltas = std::move(next_deltas);
            }
        }
    }
    return st;
}

std::string report_to_json(const TheoremReport& r) {
    nlohmann::ordered_json j;
    j["theorem_id"] = r.theorem_id;
    j["graph_id"] = r.graph_id;
    j["expected"] = r.expected;
    j["observed"] = r.observed;
    j["verdict"] = verdict_name(r.verdict);
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

std::string summary_to_csv(const std::vector<SweepSummaryRow>& rows) {
    std::string out = "theorem_id,graphs_checked,passes,fails,inconclusive\n";
    for (const SweepSummaryRow& r : rows)
        out += r.theorem_id + "," + std::to_string(r.graphs_checked) + "," +
               std::to_string(r.passes) + "," + std::to_string(r.fails) + "," +
               std::to_string(r.inconclusive) + "\n";
    return out;
}

}  // namespace grundy
