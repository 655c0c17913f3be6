#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "grundy/constructions.hpp"
#include "grundy/graph.hpp"
#include "grundy/graph6.hpp"
#include "grundy/harness.hpp"

using namespace grundy;
using Catch::Matchers::ContainsSubstring;

static Graph prism() {
    return cartesian_product(complete_graph(4), complete_graph(2));
}

TEST_CASE("delta bound on tight examples") {
    TheoremReport r = check_delta_bound(cycle_graph(6));
    REQUIRE(r.verdict == Verdict::pass);
    REQUIRE(r.observed == "n=6 delta=2 gamma=5");
    REQUIRE(r.graph_id == to_graph6(cycle_graph(6)));
    REQUIRE(check_delta_bound(complete_graph(5)).verdict == Verdict::pass);
    REQUIRE(check_delta_bound(edgeless_graph(4)).verdict == Verdict::pass);
}

TEST_CASE("budget exhaustion is inconclusive, never pass") {
    SolveOptions tight;
    tight.node_budget = 3;
    REQUIRE(check_delta_bound(cycle_graph(9), tight).verdict ==
            Verdict::inconclusive);
    REQUIRE(check_edge_removal(cycle_graph(9), tight).verdict ==
            Verdict::inconclusive);
}

TEST_CASE("edge removal deltas on landmark graphs") {
    REQUIRE(check_edge_removal(prism()).verdict == Verdict::pass);

    // a rung of the clique prism lifts the value from 5 to 6
    std::set<int> d = edge_removal_deltas(prism());
    REQUIRE(d.count(1) == 1);

    // K_n minus any edge gains exactly one
    REQUIRE(edge_removal_deltas(complete_graph(5)) == std::set<int>{1});

    // cutting the bridge drops the value by one
    REQUIRE(edge_removal_deltas(double_cycle_bridge(3).graph).count(-1) == 1);

    // removing a cycle edge of a cycle-with-leaf leaves a full tree
    REQUIRE(edge_removal_deltas(cycle_with_leaf(4).graph).count(0) == 1);
}

TEST_CASE("vertex removal deltas on landmark graphs") {
    REQUIRE(vertex_removal_deltas(complete_graph(5)) == std::set<int>{0});
    REQUIRE(vertex_removal_deltas(path_graph(6)).count(-1) == 1);

    // deleting the leaf costs two: the support loses its late footprint too
    REQUIRE(vertex_removal_deltas(cycle_with_leaf(5).graph).count(-2) == 1);

    REQUIRE(check_vertex_removal(cycle_with_leaf(5).graph).verdict ==
            Verdict::pass);
    // removing the only vertex leaves the empty graph, which counts as zero
    REQUIRE(check_vertex_removal(complete_graph(1)).verdict == Verdict::pass);
}

TEST_CASE("k edge deltas") {
    REQUIRE(check_k_edge_deltas(prism(), 2).verdict == Verdict::pass);
    // fewer edges than k: vacuously fine
    REQUIRE(check_k_edge_deltas(path_graph(3), 5).verdict == Verdict::pass);
    for (std::uint64_t s = 0; s < 10; ++s) {
        Graph g = random_graph(4 + int(s % 5), 0.4, s);
        REQUIRE(check_k_edge_deltas(g, 1 + int(s % 3), s).verdict ==
                Verdict::pass);
    }
    REQUIRE_THROWS_AS(check_k_edge_deltas(prism(), 0), std::invalid_argument);
}

TEST_CASE("complete characterization") {
    REQUIRE(check_complete_characterization(complete_graph(7)).verdict ==
            Verdict::pass);
    REQUIRE(check_complete_characterization(cycle_graph(4)).verdict ==
            Verdict::pass);
    REQUIRE(check_complete_characterization(path_graph(2)).verdict ==
            Verdict::inconclusive);
    REQUIRE(check_complete_characterization(edgeless_graph(3)).verdict ==
            Verdict::inconclusive);
}

TEST_CASE("triple twin") {
    TheoremReport k4 = check_triple_twin(complete_graph(4));
    REQUIRE(k4.verdict == Verdict::pass);
    REQUIRE_THAT(k4.observed, ContainsSubstring("triple"));

    // the pendant support's neighborhood differs, so no triple qualifies
    // and the full-length value is vacuously consistent
    Graph paw = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    TheoremReport r = check_triple_twin(paw);
    REQUIRE(r.verdict == Verdict::pass);
    REQUIRE_THAT(r.observed, ContainsSubstring("no qualifying"));

    // a triangle with an isolated spectator keeps its twin triple
    Graph k3iso = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}});
    REQUIRE(check_triple_twin(k3iso).verdict == Verdict::pass);
}

TEST_CASE("full implies leaf") {
    REQUIRE(check_full_implies_leaf(path_graph(5)).verdict == Verdict::pass);
    REQUIRE(check_full_implies_leaf(cycle_graph(5)).verdict == Verdict::pass);
    REQUIRE(check_full_implies_leaf(complete_graph(4)).verdict ==
            Verdict::pass);
}

TEST_CASE("induced monotone") {
    REQUIRE(check_induced_monotone(cycle_with_leaf(5).graph).verdict ==
            Verdict::pass);
    REQUIRE(check_induced_monotone(complete_graph(1)).verdict ==
            Verdict::pass);
    for (std::uint64_t s = 0; s < 20; ++s)
        REQUIRE(check_induced_monotone(random_graph(3 + int(s % 7), 0.5, s), s)
                    .verdict == Verdict::pass);
}

TEST_CASE("forest full corpus") {
    TheoremReport r = check_forest_full(42);
    REQUIRE(r.verdict == Verdict::pass);
    REQUIRE_THAT(r.observed, ContainsSubstring("52 forests"));
}

TEST_CASE("exhaustive sweeps stay clean") {
    SweepResult r3 = exhaustive_sweep(3);
    REQUIRE(r3.graphs_enumerated == 8);
    REQUIRE_FALSE(r3.halted);

    SweepResult r4 = exhaustive_sweep(4);
    REQUIRE(r4.graphs_enumerated == 64);
    for (const SweepSummaryRow& row : r4.summary) {
        REQUIRE(row.fails == 0);
        REQUIRE(row.inconclusive == 0);
    }
    for (const SweepSummaryRow& row : r4.summary)
        if (row.theorem_id == "complete-characterization")
            REQUIRE(row.graphs_checked == 38);  // labeled connected on 4
}

TEST_CASE("sweep is deterministic across worker counts") {
    SweepResult a = exhaustive_sweep(4, 1);
    SweepResult b = exhaustive_sweep(4, 3);
    REQUIRE(a.graphs_enumerated == b.graphs_enumerated);
    REQUIRE(a.summary.size() == b.summary.size());
    for (size_t i = 0; i < a.summary.size(); ++i) {
        REQUIRE(a.summary[i].theorem_id == b.summary[i].theorem_id);
        REQUIRE(a.summary[i].graphs_checked == b.summary[i].graphs_checked);
        REQUIRE(a.summary[i].passes == b.summary[i].passes);
    }
    REQUIRE(a.reports.size() == b.reports.size());
}

TEST_CASE("sweep check selection") {
    SweepResult r = exhaustive_sweep(4, 2, {"edge-removal"});
    REQUIRE(r.summary.size() == 1);
    REQUIRE(r.summary[0].theorem_id == "edge-removal");
    REQUIRE(r.summary[0].graphs_checked == 64);
    REQUIRE_THROWS_AS(exhaustive_sweep(4, 1, {"bogus"}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(exhaustive_sweep(7), std::invalid_argument);
}

TEST_CASE("random corpus sweep") {
    CorpusOptions o;
    o.workers = 4;
    SweepResult r = random_corpus_sweep(o);
    REQUIRE_FALSE(r.halted);
    REQUIRE(r.graphs_enumerated == 1951);  // 1800 corpus + 50 + 100 + 1
    for (const SweepSummaryRow& row : r.summary) REQUIRE(row.fails == 0);
}

TEST_CASE("extremal search covers seeded deltas and stays in range") {
    SearchOptions o;
    o.steps = 40;
    o.restarts = 2;
    o.min_n = 5;
    o.max_n = 6;
    o.seed = 7;

    SearchState vs = extremal_search(DeltaTarget::vertex_deltas, o,
                                     cycle_with_leaf(5).graph);
    REQUIRE(vs.realized_deltas.count(-2) == 1);
    REQUIRE(vs.score >= 2);
    REQUIRE(vs.step_count >= 1);

    SearchState a = extremal_search(DeltaTarget::edge_deltas, o);
    SearchState b = extremal_search(DeltaTarget::edge_deltas, o);
    REQUIRE(to_graph6(a.current) == to_graph6(b.current));
    REQUIRE(a.step_count == b.step_count);
    REQUIRE(a.realized_deltas == b.realized_deltas);
    for (int d : a.realized_deltas) {
        REQUIRE(d >= -1);
        REQUIRE(d <= 2);
    }

    REQUIRE(delta_target_from_name("edge-deltas") == DeltaTarget::edge_deltas);
    REQUIRE(delta_target_name(DeltaTarget::vertex_deltas) == "vertex-deltas");
    REQUIRE_THROWS_AS(delta_target_from_name("both"), std::invalid_argument);

    SearchOptions bad;
    bad.min_n = 1;
    REQUIRE_THROWS_AS(extremal_search(DeltaTarget::edge_deltas, bad),
                      std::invalid_argument);
}

TEST_CASE("report serialization") {
    TheoremReport r = check_delta_bound(cycle_graph(6));
    nlohmann::json j = nlohmann::json::parse(report_to_json(r));
    REQUIRE(j["theorem_id"] == "delta-bound");
    REQUIRE(j["verdict"] == "pass");
    REQUIRE(j["graph_id"] == to_graph6(cycle_graph(6)));
    REQUIRE(j["observed"] == "n=6 delta=2 gamma=5");

    std::string csv = summary_to_csv(exhaustive_sweep(3).summary);
    REQUIRE_THAT(csv, ContainsSubstring("theorem_id,graphs_checked"));
    REQUIRE_THAT(csv, ContainsSubstring("delta-bound,8,8,0,0"));
}
