#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grundy {

// Hard cap on graph order: one 64-bit adjacency word per vertex.
inline constexpr int kMaxVertices = 64;

// Simple undirected graph on {0, ..., n-1}, immutable after construction.
// The surgery operations (remove_edge, remove_vertex, add_leaf, ...) return
// new graphs instead of mutating. Neighborhoods are bitmasks, bit u of
// open_neighborhood(v) meaning uv is an edge.
class Graph {
public:
    Graph() = default;  // the empty graph on zero vertices

    // Rejects self-loops and out-of-range endpoints; duplicate edges collapse.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;

    std::uint64_t open_neighborhood(int v) const;    // N(v)
    std::uint64_t closed_neighborhood(int v) const;  // N[v]
    int degree(int v) const;
    int min_degree() const;  // requires order() >= 1

    std::uint64_t vertex_mask() const;               // bits 0..n-1
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    bool is_connected() const;  // vacuously true for n <= 1
    bool is_complete() const;
    bool is_forest() const;
    bool is_tree() const { return is_connected() && is_forest(); }

    Graph add_edge(int u, int v) const;     // edge must be absent
    Graph remove_edge(int u, int v) const;  // edge must be present
    Graph remove_vertex(int v) const;       // vertices above v shift down one
    Graph add_leaf(int v) const;            // new vertex n attached to v
    Graph induced(std::uint64_t keep) const;  // labels compacted, order kept

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Vertex (a, b) of the product gets label a * h.order() + b.
Graph cartesian_product(const Graph& g, const Graph& h);

Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& part_sizes);

// Seeded and reproducible: mt19937_64 is fully specified by the standard and
// we draw from it directly, so the same seed gives the same graph everywhere.
Graph random_graph(int n, double p, std::uint64_t seed);
Graph random_tree(int n, std::uint64_t seed);

// Streams all 2^(n*(n-1)/2) labeled graphs on n vertices, upper-triangle
// counter order, each exactly once. The cap guards against runaway sweeps;
// raise it explicitly if you really mean to go bigger.
class LabeledGraphEnumerator {
public:
    explicit LabeledGraphEnumerator(int n, int cap = 6);
    bool next(Graph& out);
    std::uint64_t total() const { return total_; }

private:
    int n_;
    std::uint64_t total_ = 0;
    std::uint64_t index_ = 0;
};

}  // namespace grundy
