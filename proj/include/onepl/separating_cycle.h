#pragma once

#include "onepl/planar_graph.h"

namespace onepl {

/// Constructive witness for full 1-plane graphs: a cycle in R(G) through
/// exactly the separating set, with G-vertices on both sides.
struct SeparatingCycle {
    PlanarGraph lambda;                // the radial planarization used
    std::vector<VertexId> cycle;       // alternating S-vertex, face vertex
    std::vector<EdgeId> cycle_edges;   // cycle_edges[i] joins cycle[i], cycle[i+1]
    std::vector<VertexId> side_a;      // Lambda vertices strictly inside/outside
    std::vector<VertexId> side_b;
};

/// Builds the alternating cycle for a full 1-plane embedding and a minimal
/// separating set: transition faces, the clockwise-between scan, greedy
/// maximal path, and one of the three closing cases.  All postconditions
/// (radial edges only, no dummies, V_G(C) = S, G-vertices on both sides)
/// are re-verified before returning.
SeparatingCycle full_cycle(const OnePlaneEmbedding& e, const std::vector<VertexId>& s);

} // namespace onepl
