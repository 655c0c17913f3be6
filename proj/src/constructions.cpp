#include "grundy/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "grundy/engine.hpp"
#include "grundy/solver.hpp"

namespace grundy {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Every construction funnels through here: the witness must be a valid
// l-sequence of exactly the promised length, otherwise the construction
// itself is buggy and nothing is returned.
ConstructionOutput certified(Graph g, std::vector<int> witness, int expected,
                             Family provenance, bool degenerate = false) {
    ValidationResult check = validate_sequence(g, Variant::l, witness);
    if (!check.ok || static_cast<int>(witness.size()) != expected)
        throw InternalCheckError("construction " + family_name(provenance) +
                                 ": witness failed self-validation");
    ConstructionOutput out;
    out.graph = std::move(g);
    out.witness = std::move(witness);
    out.expected_gamma = expected;
    out.provenance = provenance;
    out.degenerate = degenerate;
    return out;
}

// Ring positions are 1-indexed in the usual statement of the ordering; the
// emitted labels are position - 1. Position 2 (vertex 1) is never played.
std::vector<int> cycle_order(int n) {
    std::vector<int> order;
    for (int pos = 1; pos <= n; pos += 2) order.push_back(pos - 1);
    for (int pos = n - (n & 1); pos >= 4; pos -= 2) order.push_back(pos - 1);
    return order;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::cycle: return "cycle";
        case Family::cycle_with_leaf: return "cycle-with-leaf";
        case Family::clique_with_leaves: return "clique-with-leaves";
        case Family::saturate: return "saturate";
        case Family::leaf_augment: return "leaf-augment";
        case Family::double_cycle_bridge: return "double-cycle-bridge";
    }
    throw std::invalid_argument("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::cycle, Family::cycle_with_leaf,
                     Family::clique_with_leaves, Family::saturate,
                     Family::leaf_augment, Family::double_cycle_bridge})
        if (family_name(f) == name) return f;
    throw std::invalid_argument("unknown construction family: " + name);
}

ConstructionOutput cycle_witness(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle_witness: need n >= 3");
    return certified(cycle_graph(n), cycle_order(n), n - 1, Family::cycle);
}

ConstructionOutput cycle_with_leaf(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle_with_leaf: need n >= 3");
    Graph g = cycle_graph(n).add_leaf(1);
    std::vector<int> witness{n};
    for (int v : cycle_order(n)) witness.push_back(v);
    witness.push_back(1);
    return certified(std::move(g), std::move(witness), n + 1,
                     Family::cycle_with_leaf);
}

ConstructionOutput clique_with_leaves(int k) {
    if (k < 2)
        throw std::invalid_argument("clique_with_leaves: need k >= 2");
    Graph g = complete_graph(k);
    for (int i = 0; i < k - 1; ++i) g = g.add_leaf(i);  // pendant k+i on i
    std::vector<int> witness{k - 1};
    for (int i = 0; i < k - 1; ++i) witness.push_back(k + i);
    for (int i = 0; i < k - 1; ++i) witness.push_back(i);
    return certified(std::move(g), std::move(witness), 2 * k - 1,
                     Family::clique_with_leaves, /*degenerate=*/k == 2);
}

ConstructionOutput saturate(const Graph& g, const std::vector<int>& s) {
    const int n = g.order();
    ValidationResult check = validate_sequence(g, Variant::l, s);
    if (!check.ok)
        throw std::invalid_argument(
            "saturate: sequence is not a valid l-sequence (fails at index " +
            std::to_string(check.fail_index) + ")");
    const int k = static_cast<int>(s.size());
    if (k >= n)
        throw std::invalid_argument(
            "saturate: sequence already plays every vertex");
    SolveResult exact = solve(g, Variant::l);
    if (k != exact.value)
        throw std::invalid_argument(
            "saturate: sequence has length " + std::to_string(k) +
            " but the maximum is " + std::to_string(exact.value));

    std::uint64_t played = 0;
    for (int v : s) played |= bit(v);
    Graph grown = g;
    std::vector<int> witness = s;
    std::vector<int> unplayed;
    for (int v = 0; v < n; ++v) {
        if (played >> v & 1) continue;
        witness.push_back(grown.order());  // the pendant just added below
        grown = grown.add_leaf(v);
        unplayed.push_back(v);
    }
    for (int v : unplayed) witness.push_back(v);

    // Pendants pin the minimum degree at one whenever g had no isolated
    // vertex; isolated played vertices keep degree zero and are exempt.
    if (g.min_degree() >= 1 && grown.min_degree() != 1)
        throw InternalCheckError("saturate: expected minimum degree one");
    return certified(std::move(grown), std::move(witness), 2 * n - k,
                     Family::saturate);
}

ConstructionOutput leaf_augment(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("leaf_augment: graph must be connected");
    Graph grown = g;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3) grown = grown.add_leaf(v);
    std::vector<int> witness = proof_order_witness(grown);
    const int full = grown.order();
    return certified(std::move(grown), std::move(witness), full,
                     Family::leaf_augment);
}

ConstructionOutput double_cycle_bridge(int n) {
    if (n < 3)
        throw std::invalid_argument("double_cycle_bridge: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
    }
    edges.emplace_back(1, n + 1);
    Graph g = Graph::from_edges(2 * n, edges);

    // The second ring's ordering survives vertex n+1 being pre-blocked by
    // the bridge step: no step of the ring ordering relies on position 2
    // as its only fresh vertex.
    std::vector<int> witness = cycle_order(n);
    witness.push_back(1);
    for (int v : cycle_order(n)) witness.push_back(n + v);
    return certified(std::move(g), std::move(witness), 2 * n - 1,
                     Family::double_cycle_bridge);
}

namespace {

struct ChainWalk {
    std::vector<int> chain;  // the degree-2 run, ordered from anchor0's side
    int anchor0 = -1;
    int anchor1 = -1;
    bool wrapped = false;  // walked back to the start: a bare cycle
};

int other_neighbor(const Graph& g, int v, int avoid) {
    std::uint64_t rest = g.open_neighborhood(v) & ~bit(avoid);
    return std::countr_zero(rest);
}

// Walk from a degree-2 vertex in one direction until the run of degree-2
// vertices ends; collect the interior vertices passed along the way.
int walk_end(const Graph& g, int start, int first, std::vector<int>* interior,
             bool* wrapped) {
    int prev = start;
    int cur = first;
    while (g.degree(cur) == 2) {
        if (cur == start) {
            *wrapped = true;
            return -1;
        }
        interior->push_back(cur);
        int next = other_neighbor(g, cur, prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

ChainWalk trace_chain(const Graph& g, int start) {
    std::uint64_t nbrs = g.open_neighborhood(start);
    int lo = std::countr_zero(nbrs);
    int hi = other_neighbor(g, start, lo);

    ChainWalk w;
    std::vector<int> low_side, high_side;
    w.anchor0 = walk_end(g, start, lo, &low_side, &w.wrapped);
    if (w.wrapped) return w;
    w.anchor1 = walk_end(g, start, hi, &high_side, &w.wrapped);
    if (w.wrapped) return w;

    std::reverse(low_side.begin(), low_side.end());
    w.chain = std::move(low_side);
    w.chain.push_back(start);
    w.chain.insert(w.chain.end(), high_side.begin(), high_side.end());
    return w;
}

}  // namespace

std::vector<int> proof_order_witness(const Graph& g) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 3) continue;
        std::uint64_t pendants = 0;
        std::uint64_t nbrs = g.open_neighborhood(v);
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (g.degree(u) == 1) pendants |= bit(u);
        }
        if (!pendants)
            throw std::invalid_argument(
                "proof_order_witness: vertex " + std::to_string(v) +
                " has degree >= 3 but no pendant neighbor");
    }

    SequenceState st;
    std::uint64_t footprinted = 0;
    auto play = [&](int v) {
        std::uint64_t fresh = coverage_set(g, Variant::l, v) & ~st.blocked;
        if (!step_valid(g, Variant::l, st, v))
            throw InternalCheckError(
                "proof_order_witness: derived order stalls at vertex " +
                std::to_string(v));
        append_step(g, Variant::l, st, v);
        footprinted |= fresh;
    };

    // Degree-2 chains, lowest start vertex first. Interiors go ascending
    // along the chain; the two final chain vertices swap when the far anchor
    // was already footprinted, and leaf anchors are woven into the chain.
    std::uint64_t chained = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2 || (chained >> v & 1)) continue;
        ChainWalk w = trace_chain(g, v);
        if (w.wrapped)
            throw std::invalid_argument(
                "proof_order_witness: the degree-2 chain through vertex " +
                std::to_string(v) + " closes into a bare cycle");
        for (int c : w.chain) chained |= bit(c);

        bool leaf0 = g.degree(w.anchor0) == 1;
        bool leaf1 = g.degree(w.anchor1) == 1;
        const int m = static_cast<int>(w.chain.size());
        if (leaf0 && leaf1) {
            // A whole path component: both anchors join the ordering here.
            play(w.anchor0);
            for (int i = 0; i + 1 < m; ++i) play(w.chain[i]);
            play(w.anchor1);
            play(w.chain[m - 1]);
            continue;
        }
        if (leaf1) {
            std::reverse(w.chain.begin(), w.chain.end());
            std::swap(w.anchor0, w.anchor1);
            std::swap(leaf0, leaf1);
        }
        if (leaf0) play(w.anchor0);
        if (m == 1) {
            play(w.chain[0]);
            continue;
        }
        for (int i = 0; i + 2 < m; ++i) play(w.chain[i]);
        if (footprinted >> w.anchor1 & 1) {
            play(w.chain[m - 1]);
            play(w.chain[m - 2]);
        } else {
            play(w.chain[m - 2]);
            play(w.chain[m - 1]);
        }
    }

    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= 1 && !(st.chosen_mask >> v & 1)) play(v);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) play(v);

    if (static_cast<int>(st.chosen.size()) != n)
        throw InternalCheckError(
            "proof_order_witness: ordering is not full length");
    return st.chosen;
}

Graph t_structure_instance(int k) {
    if (k < 1)
        throw std::invalid_argument("t_structure_instance: need k >= 1");
    if (2 * k > kMaxVertices)
        throw std::invalid_argument("t_structure_instance: k too large");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= i; ++j) edges.emplace_back(i, k + j);
    return Graph::from_edges(2 * k, edges);
}

}  // namespace grundy
