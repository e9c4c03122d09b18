#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "onepl/planar_graph.h"

namespace onepl {

/// BFS layering of Lambda(G).  Layers are 1-based: V_1 = {root}, V_j holds
/// the vertices at distance j-1, d is the deepest non-empty layer.  Every
/// edge lands in exactly one `within[j]` (both ends in V_j) or `between[j]`
/// (connecting V_{j-1} and V_j).
struct BfsLayering {
    VertexId root = 0;
    int depth = 0;                                      // d
    std::vector<int> layer;                             // per Lambda vertex, 1..d
    std::vector<VertexId> parent;                       // BFS tree, kNone at root
    std::vector<EdgeId> parent_edge;                    // tree edge to parent, kNone at root
    std::vector<std::vector<VertexId>> layer_vertices;  // index 0 unused
    std::vector<std::vector<EdgeId>> within;            // index 0 unused
    std::vector<std::vector<EdgeId>> between;           // between[j]: V_{j-1} -- V_j
};

/// Auxiliary edge sets: U_j is a star on V_j at the lowest-id representative
/// r_j; L_j is a simple edge set on V_j whose connectivity equals that of
/// the suffix graph Lambda[V_j ... V_d] restricted to V_j.
struct AuxEdges {
    std::vector<VertexId> rep;                                        // r_j, kNone if |V_j| == 0
    std::vector<std::vector<std::pair<VertexId, VertexId>>> upper;    // U_j
    std::vector<std::vector<std::pair<VertexId, VertexId>>> lower;    // L_j
};

BfsLayering bfs_layering(const PlanarGraph& lambda);
void build_upper_sets(const BfsLayering& bl, AuxEdges& aux);
void build_lower_sets(const PlanarGraph& lambda, const BfsLayering& bl, AuxEdges& aux);

/// Everything the per-window operations need, built once per input.
struct LambdaLayers {
    const PlanarGraph* lambda = nullptr;
    BfsLayering bl;
    AuxEdges aux;
    std::vector<CrossedEdge> crossed;              // from crossed_edge_map
    std::vector<std::vector<int>> crossed_at_dummy; // dummy vertex -> indices into crossed

    // Reusable per-window scratch (global -> local mapping via stamps).
    mutable std::vector<int> local_of;
    mutable std::vector<int> stamp;
    mutable int current_stamp = 0;

    // Accounting for the run-time budget test.
    mutable long long edge_touches = 0;

    int num_windows(int w) const { return std::max(0, bl.depth - w + 2) + 1; }
};

LambdaLayers build_lambda_layers(const PlanarGraph& lambda, const OnePlaneEmbedding& e);

/// Window graph Lambda_i (and, after augment_window, Lambda_i^+).
struct WindowGraph {
    int i = 0, w = 0;
    int stamp_id = 0;               // ties the window to the context scratch state
    std::vector<VertexId> verts;    // local -> Lambda vertex id
    std::vector<int> layer;         // absolute layer per local vertex
    std::vector<bool> is_g;         // Original-kind vertex
    std::vector<bool> x_allowed;    // layer within [i+1, i+w-2]
    int center = 0;                 // local id of r
    int eccentricity = 0;

    struct Edge {
        int a, b;
    };
    std::vector<Edge> edges;        // induced + U + L, then crossed G-edges
    int plus_begin = -1;            // edges[plus_begin..) added by augment_window

    // Spoke pairs (dummy, endpoint) handed to the decomposition builder so
    // that the dummy-neighbourhood augmentation stays contiguous even when both
    // ends sit in an outer layer.
    std::vector<Edge> td_extra;

    // For each local dummy vertex, its in-window crossing endpoints.
    std::vector<std::pair<int, std::array<int, 4>>> dummy_endpoints;

    bool augmented() const { return plus_begin >= 0; }
    int num_vertices() const { return static_cast<int>(verts.size()); }
    int g_vertex_count() const;

    /// Adjacency over all current edges (call after augment for Lambda_i^+).
    std::vector<std::vector<int>> adjacency() const;
};

using WindowPlus = WindowGraph;

/// Assembles Lambda_i; verifies the radius bound (throws
/// InternalInvariantError on violation) and the planarity edge bound.
WindowGraph assemble_window(const LambdaLayers& ctx, int i, int w);

/// Adds every crossed G-edge whose endpoints and dummy are all in the window.
WindowPlus augment_window(const LambdaLayers& ctx, WindowGraph win);

} // namespace onepl
