#include "grundy/graph.hpp"

#include <bit>
#include <random>
#include <set>
#include <stdexcept>

namespace grundy {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// std::uniform_*_distribution sequences are implementation-defined, so we
// draw from the engine directly to keep seeded output portable.
double unit_draw(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1p-53; }

int bounded_draw(std::mt19937_64& rng, int n) {
    return int(rng() % std::uint64_t(n));
}

}  // namespace

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n_) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " outside [0, " + std::to_string(kMaxVertices) + "]");
    Graph g;
    g.n_ = n;
    g.adj_.assign(size_t(n), 0);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[size_t(u)] |= bit(v);
        g.adj_[size_t(v)] |= bit(u);
    }
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[size_t(u)] >> v & 1;
}

std::uint64_t Graph::open_neighborhood(int v) const {
    check_vertex(v);
    return adj_[size_t(v)];
}

std::uint64_t Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    return adj_[size_t(v)] | bit(v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[size_t(v)]);
}

int Graph::min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min_degree: empty graph");
    int best = kMaxVertices;
    for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(adj_[size_t(v)]));
    return best;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == kMaxVertices ? ~std::uint64_t{0} : bit(n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (std::uint64_t m = adj_[size_t(u)] & ~(bit(u) | (bit(u) - 1)); m; m &= m - 1)
            out.emplace_back(u, std::countr_zero(m));
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= adj_[size_t(std::countr_zero(m))];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertex_mask();
}

bool Graph::is_complete() const {
    for (int v = 0; v < n_; ++v)
        if (adj_[size_t(v)] != (vertex_mask() & ~bit(v))) return false;
    return true;
}

bool Graph::is_forest() const {
    // A graph is acyclic iff every component has exactly order-1 edges.
    int components = 0;
    std::uint64_t unseen = vertex_mask();
    while (unseen) {
        ++components;
        std::uint64_t seen = bit(std::countr_zero(unseen)), frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                next |= adj_[size_t(std::countr_zero(m))];
            frontier = next & ~seen;
            seen |= next;
        }
        unseen &= ~seen;
    }
    return edge_count() == n_ - components;
}

Graph Graph::add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") already present");
    Graph g = *this;
    g.adj_[size_t(u)] |= bit(v);
    g.adj_[size_t(v)] |= bit(u);
    return g;
}

Graph Graph::remove_edge(int u, int v) const {
    if (!has_edge(u, v))
        throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") not present");
    Graph g = *this;
    g.adj_[size_t(u)] &= ~bit(v);
    g.adj_[size_t(v)] &= ~bit(u);
    return g;
}

Graph Graph::remove_vertex(int v) const {
    check_vertex(v);
    Graph g;
    g.n_ = n_ - 1;
    g.adj_.reserve(size_t(n_ - 1));
    const std::uint64_t low = bit(v) - 1;  // bits strictly below v keep their place
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        std::uint64_t row = adj_[size_t(u)] & ~bit(v);
        g.adj_.push_back((row & low) | ((row >> 1) & ~low));
    }
    return g;
}

Graph Graph::add_leaf(int v) const {
    check_vertex(v);
    if (n_ + 1 > kMaxVertices)
        throw std::invalid_argument("add_leaf would exceed the vertex cap");
    Graph g = *this;
    g.n_ = n_ + 1;
    g.adj_.push_back(bit(v));
    g.adj_[size_t(v)] |= bit(n_);
    return g;
}

Graph Graph::induced(std::uint64_t keep) const {
    if (keep & ~vertex_mask())
        throw std::invalid_argument("induced: keep mask names vertices outside the graph");
    std::vector<int> label(size_t(n_), -1);
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if (keep >> v & 1) label[size_t(v)] = m++;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges())
        if (label[size_t(u)] >= 0 && label[size_t(v)] >= 0)
            es.emplace_back(label[size_t(u)], label[size_t(v)]);
    return from_edges(m, es);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int gn = g.order(), hn = h.order();
    if (gn * hn > kMaxVertices)
        throw std::invalid_argument("cartesian product exceeds the vertex cap");
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < gn; ++a)
        for (auto [b, b2] : h.edges()) es.emplace_back(a * hn + b, a * hn + b2);
    for (int b = 0; b < hn; ++b)
        for (auto [a, a2] : g.edges()) es.emplace_back(a * hn + b, a2 * hn + b);
    return Graph::from_edges(gn * hn, es);
}

Graph edgeless_graph(int n) { return Graph::from_edges(n, {}); }

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    int n = 0;
    std::vector<int> part_of;
    for (size_t p = 0; p < part_sizes.size(); ++p) {
        if (part_sizes[p] < 1)
            throw std::invalid_argument("complete_multipartite: parts must be nonempty");
        n += part_sizes[p];
        part_of.insert(part_of.end(), size_t(part_sizes[p]), int(p));
    }
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[size_t(u)] != part_of[size_t(v)]) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("random_graph: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (unit_draw(rng) < p) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("random_tree: order out of range");
    if (n == 1) return edgeless_graph(1);
    if (n == 2) return path_graph(2);
    std::mt19937_64 rng(seed);
    // Decode a uniformly random Pruefer sequence.
    std::vector<int> code(size_t(n - 2));
    for (int& x : code) x = bounded_draw(rng, n);
    std::vector<int> deg(size_t(n), 1);
    for (int x : code) ++deg[size_t(x)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[size_t(v)] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> es;
    for (int x : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        es.emplace_back(leaf, x);
        if (--deg[size_t(x)] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    es.emplace_back(a, b);
    return Graph::from_edges(n, es);
}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n, int cap) : n_(n) {
    if (n < 0 || n > cap)
        throw std::invalid_argument("labeled enumeration capped at n <= " +
                                    std::to_string(cap) + ", got " + std::to_string(n));
    const int pairs = n * (n - 1) / 2;
    if (pairs > 62) throw std::invalid_argument("labeled enumeration: too many vertex pairs");
    total_ = std::uint64_t{1} << pairs;
}

bool LabeledGraphEnumerator::next(Graph& out) {
    if (index_ == total_) return false;
    std::vector<std::pair<int, int>> es;
    int k = 0;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (index_ >> k & 1) es.emplace_back(u, v);
    out = Graph::from_edges(n_, es);
    ++index_;
    return true;
}

}  // namespace grundy
