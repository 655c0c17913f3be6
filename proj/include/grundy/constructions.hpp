#pragma once

#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

// Families of graphs with a known L-Grundy value and an explicit witness
// ordering. Every output is engine-validated before it is returned, so a
// ConstructionOutput in hand is already certified.
enum class Family {
    cycle,
    cycle_with_leaf,
    clique_with_leaves,
    saturate,
    leaf_augment,
    double_cycle_bridge,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);  // throws std::invalid_argument

struct ConstructionOutput {
    Graph graph;
    std::vector<int> witness;  // valid l-sequence of length expected_gamma
    int expected_gamma = 0;
    Family provenance = Family::cycle;
    bool degenerate = false;  // set when parameters collapse the family shape
};

// C_n with ring labels 0..n-1. Witness: odd ring positions ascending, then
// even positions descending, always skipping position 2 (labels here are
// 0-indexed, so that is vertex 1). Value n - 1.
ConstructionOutput cycle_witness(int n);  // n >= 3

// C_n plus a leaf attached to vertex 1, labeled n. Witness: the leaf first,
// the cycle ordering above, vertex 1 last. Value n + 1, i.e. every vertex.
ConstructionOutput cycle_with_leaf(int n);  // n >= 3

// K_k on 0..k-1 plus a pendant on every clique vertex except the last,
// pendants labeled k..2k-2 in clique order. Witness: the bare clique vertex,
// all pendants, then the remaining clique vertices. Value 2k - 1 = n.
// k = 2 degenerates to a path and is flagged as such.
ConstructionOutput clique_with_leaves(int k);  // k >= 2

// Given a maximum l-sequence s on g (solver-checked, |s| < n), attach a
// pendant to every unplayed vertex. Witness: s, the pendants ascending, the
// unplayed originals ascending. Value 2n - |s| on the grown graph.
ConstructionOutput saturate(const Graph& g, const std::vector<int>& s);

// Attach a pendant to every vertex of degree >= 3 of a connected graph, then
// order the result with proof_order_witness. Full-length value. Graphs
// without such vertices pass through unchanged (paths, cycles stay as-is;
// cycles are then rejected by the ordering's own precondition).
ConstructionOutput leaf_augment(const Graph& g);

// Two disjoint C_n joined by one bridge between their vertex-1 positions
// (labels 1 and n+1). Witness: first ring's cycle ordering, the near bridge
// endpoint, second ring's cycle ordering. Value 2n - 1.
ConstructionOutput double_cycle_bridge(int n);  // n >= 3

// Full-length ordering for graphs where every vertex of degree >= 3 has a
// pendant neighbor and no component is a bare cycle: degree-2 chains first
// (with order fixups at chain ends), then degree <= 1 vertices, then the
// rest. Rejects inputs violating the precondition, naming the offender.
std::vector<int> proof_order_witness(const Graph& g);

// 2k vertices: x_0..x_{k-1} independent, y_0..y_{k-1} independent (y_j is
// vertex k+j), and x_i ~ y_j exactly when i >= j, so x_i ~ y_i pairs up and
// y_0 sees every x. Its total-variant Grundy number is 2k.
Graph t_structure_instance(int k);  // k >= 1

}  // namespace grundy
