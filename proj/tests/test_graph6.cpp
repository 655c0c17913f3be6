#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "grundy/graph.hpp"
#include "grundy/graph6.hpp"

using namespace grundy;

// Reference strings checked by hand against the format definition:
// 6-bit groups, offset 63, upper triangle in column order.
TEST_CASE("parse known strings") {
    REQUIRE(parse_graph6("?").order() == 0);
    REQUIRE(parse_graph6("@") == complete_graph(1));
    REQUIRE(parse_graph6("A_") == complete_graph(2));
    REQUIRE(parse_graph6("A?") == edgeless_graph(2));
    REQUIRE(parse_graph6("Bw") == complete_graph(3));

    Graph c5 = parse_graph6("Dhc");
    REQUIRE(c5 == cycle_graph(5));
}

TEST_CASE("format known graphs") {
    REQUIRE(to_graph6(Graph()) == "?");
    REQUIRE(to_graph6(complete_graph(1)) == "@");
    REQUIRE(to_graph6(complete_graph(2)) == "A_");
    REQUIRE(to_graph6(complete_graph(3)) == "Bw");
    REQUIRE(to_graph6(cycle_graph(5)) == "Dhc");
}

TEST_CASE("optional header and line endings") {
    REQUIRE(parse_graph6(">>graph6<<Bw") == complete_graph(3));
    REQUIRE(parse_graph6("Bw\n") == complete_graph(3));
    REQUIRE(parse_graph6("Bw\r\n") == complete_graph(3));
}

TEST_CASE("large order uses the long form") {
    Graph p63 = path_graph(63);
    std::string s = to_graph6(p63);
    REQUIRE(s[0] == '~');
    REQUIRE(parse_graph6(s) == p63);

    Graph p62 = path_graph(62);
    REQUIRE(to_graph6(p62)[0] != '~');
    REQUIRE(parse_graph6(to_graph6(p62)) == p62);
}

TEST_CASE("round trip survives random graphs") {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        int n = int(seed % 17);
        Graph g = random_graph(n, 0.35, seed);
        REQUIRE(parse_graph6(to_graph6(g)) == g);
    }
    // and a couple of dense big ones
    Graph k64 = complete_graph(64);
    REQUIRE(parse_graph6(to_graph6(k64)) == k64);
}

TEST_CASE("malformed strings are rejected") {
    REQUIRE_THROWS_AS(parse_graph6(""), FormatError);
    REQUIRE_THROWS_AS(parse_graph6(":Bw"), FormatError);   // sparse6
    REQUIRE_THROWS_AS(parse_graph6(";Bw"), FormatError);   // incremental sparse6
    REQUIRE_THROWS_AS(parse_graph6("&Bw"), FormatError);   // digraph6
    REQUIRE_THROWS_AS(parse_graph6("~~?????B"), FormatError);  // 8-byte order form
    REQUIRE_THROWS_AS(parse_graph6("B"), FormatError);     // payload too short
    REQUIRE_THROWS_AS(parse_graph6("Bww"), FormatError);   // payload too long
    REQUIRE_THROWS_AS(parse_graph6("Bx"), FormatError);    // nonzero padding bits
    REQUIRE_THROWS_AS(parse_graph6("B\x1c"), FormatError); // byte below offset
    REQUIRE_THROWS_AS(parse_graph6(std::string("B\x7f")), FormatError);
    REQUIRE_THROWS_AS(parse_graph6("~??"), FormatError);   // truncated long order
}

TEST_CASE("max_vertices cap") {
    std::string k3 = "Bw";
    REQUIRE_THROWS_AS(parse_graph6(k3, 2), FormatError);
    REQUIRE_NOTHROW(parse_graph6(k3, 3));
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    REQUIRE(g == path_graph(4));

    // whitespace is flexible, count line is authoritative
    REQUIRE(parse_edge_list("3 0") == edgeless_graph(3));
    REQUIRE(parse_edge_list("  4 2\n 0 1\n\n 2 3 ") ==
            Graph::from_edges(4, {{0, 1}, {2, 3}}));

    REQUIRE_THROWS_AS(parse_edge_list(""), FormatError);
    REQUIRE_THROWS_AS(parse_edge_list("4"), FormatError);          // missing edge count
    REQUIRE_THROWS_AS(parse_edge_list("4 2\n0 1"), FormatError);   // fewer edges than stated
    REQUIRE_THROWS_AS(parse_edge_list("4 1\n0 1\n2 3"), FormatError);  // extra data
    REQUIRE_THROWS_AS(parse_edge_list("4 1\n0 4"), FormatError);   // endpoint range
    REQUIRE_THROWS_AS(parse_edge_list("4 1\n1 1"), FormatError);   // self-loop
    REQUIRE_THROWS_AS(parse_edge_list("4 1\n0 x"), FormatError);
    REQUIRE_THROWS_AS(parse_edge_list("70 0", 64), FormatError);
}

TEST_CASE("edge list round trip") {
    Graph g = Graph::from_edges(5, {{0, 4}, {1, 2}, {0, 2}});
    REQUIRE(parse_edge_list(to_edge_list(g)) == g);
    REQUIRE(parse_edge_list(to_edge_list(Graph())) == Graph());
}
