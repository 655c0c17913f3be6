#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "grundy/graph.hpp"

using namespace grundy;

TEST_CASE("from_edges basics") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE(g.order() == 4);
    REQUIRE(g.edge_count() == 3);
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(1, 0));
    REQUIRE_FALSE(g.has_edge(0, 2));
    REQUIRE(g.degree(1) == 2);
    REQUIRE(g.degree(0) == 1);
    REQUIRE(g.min_degree() == 1);

    // duplicates collapse, both orientations count once
    Graph h = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    REQUIRE(h.edge_count() == 1);
}

TEST_CASE("from_edges rejects bad input") {
    REQUIRE_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph::from_edges(65, {}), std::invalid_argument);
    REQUIRE_NOTHROW(Graph::from_edges(64, {{0, 63}}));
}

TEST_CASE("neighborhood masks") {
    Graph c4 = cycle_graph(4);
    REQUIRE(c4.open_neighborhood(0) == 0b1010u);   // vertices 1 and 3
    REQUIRE(c4.closed_neighborhood(0) == 0b1011u);
    REQUIRE(c4.vertex_mask() == 0b1111u);
    REQUIRE_THROWS_AS(c4.degree(4), std::invalid_argument);
}

TEST_CASE("edges come back sorted") {
    Graph g = Graph::from_edges(4, {{2, 3}, {0, 2}, {1, 0}});
    std::vector<std::pair<int, int>> want = {{0, 1}, {0, 2}, {2, 3}};
    REQUIRE(g.edges() == want);
}

TEST_CASE("generators") {
    REQUIRE(path_graph(1).edge_count() == 0);
    REQUIRE(path_graph(5).edge_count() == 4);
    REQUIRE(cycle_graph(3) == complete_graph(3));
    REQUIRE(cycle_graph(5).edge_count() == 5);
    REQUIRE_THROWS_AS(cycle_graph(2), std::invalid_argument);
    REQUIRE(complete_graph(6).edge_count() == 15);
    REQUIRE(complete_graph(6).is_complete());
    REQUIRE(edgeless_graph(4).edge_count() == 0);
    REQUIRE_FALSE(edgeless_graph(4).is_connected());

    Graph k23 = complete_multipartite({2, 3});
    REQUIRE(k23.order() == 5);
    REQUIRE(k23.edge_count() == 6);
    REQUIRE_FALSE(k23.has_edge(0, 1));
    REQUIRE(k23.has_edge(0, 2));
}

TEST_CASE("connectivity and forests") {
    REQUIRE(path_graph(6).is_tree());
    REQUIRE_FALSE(cycle_graph(6).is_forest());
    REQUIRE(edgeless_graph(3).is_forest());
    REQUIRE_FALSE(edgeless_graph(3).is_tree());
    REQUIRE(Graph().is_connected());  // vacuous
    REQUIRE(complete_graph(1).is_connected());
    Graph two_comp = Graph::from_edges(4, {{0, 1}, {2, 3}});
    REQUIRE_FALSE(two_comp.is_connected());
    REQUIRE(two_comp.is_forest());
}

TEST_CASE("edge surgery") {
    Graph p3 = path_graph(3);
    Graph c3 = p3.add_edge(0, 2);
    REQUIRE(c3 == cycle_graph(3));
    REQUIRE(c3.remove_edge(0, 2) == p3);
    REQUIRE_THROWS_AS(p3.add_edge(0, 1), std::invalid_argument);   // already there
    REQUIRE_THROWS_AS(p3.remove_edge(0, 2), std::invalid_argument);  // absent
    REQUIRE_THROWS_AS(p3.add_edge(1, 1), std::invalid_argument);
}

TEST_CASE("remove_vertex shifts labels down") {
    // C_5 minus vertex 2: survivors 0,1,3,4 relabel to 0,1,2,3.
    Graph g = cycle_graph(5).remove_vertex(2);
    REQUIRE(g.order() == 4);
    std::vector<std::pair<int, int>> want = {{0, 1}, {0, 3}, {2, 3}};
    REQUIRE(g.edges() == want);

    REQUIRE(complete_graph(1).remove_vertex(0).order() == 0);
    REQUIRE_THROWS_AS(g.remove_vertex(4), std::invalid_argument);
}

TEST_CASE("add_leaf") {
    Graph g = cycle_graph(3).add_leaf(2);
    REQUIRE(g.order() == 4);
    REQUIRE(g.edge_count() == 4);
    REQUIRE(g.has_edge(2, 3));
    REQUIRE(g.degree(3) == 1);
}

TEST_CASE("induced subgraph compacts labels") {
    Graph c5 = cycle_graph(5);
    Graph sub = c5.induced(0b11011u);  // drop vertex 2, same as remove_vertex
    REQUIRE(sub == c5.remove_vertex(2));
    REQUIRE(c5.induced(c5.vertex_mask()) == c5);
    REQUIRE(c5.induced(0).order() == 0);
    REQUIRE_THROWS_AS(c5.induced(1u << 5), std::invalid_argument);
}

TEST_CASE("cartesian product") {
    Graph prism = cartesian_product(complete_graph(4), complete_graph(2));
    REQUIRE(prism.order() == 8);
    REQUIRE(prism.edge_count() == 16);
    for (int v = 0; v < 8; ++v) REQUIRE(prism.degree(v) == 4);
    // (a, b) with b in {0, 1}: rungs pair 2a with 2a+1
    REQUIRE(prism.has_edge(0, 1));
    REQUIRE(prism.has_edge(0, 2));
    REQUIRE_FALSE(prism.has_edge(0, 3));

    // P_2 x P_2 is a 4-cycle in product labels: 0-1, 0-2, 1-3, 2-3
    Graph square = cartesian_product(path_graph(2), path_graph(2));
    REQUIRE(square == Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    REQUIRE(square.is_connected());
    REQUIRE(square.min_degree() == 2);
}

TEST_CASE("random graphs are reproducible") {
    Graph a = random_graph(12, 0.4, 7);
    Graph b = random_graph(12, 0.4, 7);
    Graph c = random_graph(12, 0.4, 8);
    REQUIRE(a == b);
    REQUIRE_FALSE(a == c);
    REQUIRE_THROWS_AS(random_graph(5, 1.5, 0), std::invalid_argument);

    Graph t = random_tree(12, 3);
    REQUIRE(t.is_tree());
    REQUIRE(t.edge_count() == 11);
    REQUIRE(random_tree(12, 3) == t);
    REQUIRE(random_tree(2, 0) == path_graph(2));
    REQUIRE(random_tree(1, 0).order() == 1);
}

TEST_CASE("labeled enumeration is exhaustive") {
    LabeledGraphEnumerator en(3);
    REQUIRE(en.total() == 8);
    std::set<std::vector<std::pair<int, int>>> seen;
    Graph g;
    while (en.next(g)) seen.insert(g.edges());
    REQUIRE(seen.size() == 8);

    LabeledGraphEnumerator en4(4);
    REQUIRE(en4.total() == 64);
    int count = 0;
    int complete_hits = 0;
    while (en4.next(g)) {
        ++count;
        if (g.is_complete()) ++complete_hits;
    }
    REQUIRE(count == 64);
    REQUIRE(complete_hits == 1);

    REQUIRE_THROWS_AS(LabeledGraphEnumerator(7), std::invalid_argument);
    REQUIRE_NOTHROW(LabeledGraphEnumerator(7, 7));
}
