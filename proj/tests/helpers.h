#pragma once

#include "onepl/embedding.h"

namespace onepl::testing {

/// Plane 4-cycle.
inline OnePlaneEmbedding make_c4() {
    OnePlaneEmbedding e;
    e.n = 4;
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    e.rotations = {{0, 3}, {1, 0}, {2, 1}, {3, 2}};
    return e;
}

/// K4 drawn as a square with crossing diagonals; one full crossing whose
/// kite edges are the square boundary.
inline OnePlaneEmbedding make_k4_crossed() {
    OnePlaneEmbedding e;
    e.n = 4;
    e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}};
    e.rotations = {{0, 4, 3}, {1, 5, 0}, {2, 4, 1}, {3, 5, 2}};
    CrossingSpec cs;
    cs.edge_a = 4;
    cs.edge_b = 5;
    cs.cw_endpoints = {0, 1, 2, 3};
    e.crossings.push_back(cs);
    return e;
}

/// Plane K4 (star triangulation), valid rotation system.
inline OnePlaneEmbedding make_k4_plane() {
    OnePlaneEmbedding e;
    e.n = 4;
    e.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}};
    e.rotations = {{0, 2, 1}, {5, 0, 3}, {3, 1, 4}, {4, 2, 5}};
    return e;
}

/// Path a-b-c.
inline OnePlaneEmbedding make_path3() {
    OnePlaneEmbedding e;
    e.n = 3;
    e.edges = {{0, 1}, {1, 2}};
    e.rotations = {{0}, {0, 1}, {1}};
    return e;
}

} // namespace onepl::testing
