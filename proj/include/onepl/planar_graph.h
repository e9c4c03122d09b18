#pragma once

#include <vector>

#include "onepl/embedding.h"

namespace onepl {

enum class VertexKind { Original, Dummy, Face };
enum class EdgeKind { Plain, Radial };

/// Embedded planar multigraph with typed vertices and edges.  Rotations are
/// circular doubly-linked lists over edge-ends; the end of edge e at
/// endpoint side s (0 = first endpoint, 1 = second) has id 2*e+s.  Faces
/// are boundary walks of half-edges, filled in by trace_faces().
///
/// A half-edge is also encoded as 2*e+s and means "traverse e arriving at
/// endpoint side s".
struct PlanarGraph {
    struct Vertex {
        VertexKind kind;
        int ref;   // Original: G vertex id; Dummy: crossing id; Face: face index
    };
    struct Edge {
        VertexId u, v;
        EdgeKind kind;
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<int> cw_next;   // per edge-end, next end clockwise around the vertex
    std::vector<int> cw_prev;
    std::vector<int> any_end;   // per vertex, one incident end or kNone

    // Face walks; faces[f] lists arriving half-edges in walk order.
    std::vector<std::vector<int>> faces;

    // Provenance for crossed G-edges: for crossing c, the dummy vertex and
    // the replacement edge toward each of cw_endpoints[0..3].
    struct CrossingImage {
        VertexId dummy;
        std::array<EdgeId, 4> spoke;   // edge ids in this graph
    };
    std::vector<CrossingImage> crossing_images;

    // Image of each G-edge: [0] the piece at the edge's first endpoint, [1]
    // at the second.  Equal entries for uncrossed edges.
    std::vector<std::array<EdgeId, 2>> g_edge_image;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_faces() const { return static_cast<int>(faces.size()); }

    VertexId end_vertex(int end) const {
        const Edge& e = edges[end >> 1];
        return (end & 1) ? e.v : e.u;
    }
    VertexId edge_other(EdgeId e, VertexId v) const {
        return edges[e].u == v ? edges[e].v : edges[e].u;
    }
    int end_of(EdgeId e, VertexId v) const {   // loop-free graphs only
        return 2 * e + (edges[e].v == v ? 1 : 0);
    }

    /// New isolated vertex.
    VertexId add_vertex(VertexKind kind, int ref);

    /// New edge whose ends are appended after `after_u` / `after_v` in the
    /// clockwise order (kNone = vertex currently isolated or "anywhere").
    EdgeId add_edge(VertexId u, VertexId v, EdgeKind kind, int after_u, int after_v);

    /// Arriving half-edge -> next arriving half-edge of the same face walk.
    int face_next(int halfedge) const;

    /// Collects incident edge ids of v in clockwise order.
    std::vector<EdgeId> rotation_of(VertexId v) const;

    std::vector<VertexId> neighbors(VertexId v) const;

    bool is_connected() const;

    /// Traces all face walks from the rotation system and stores them.
    /// Returns false (leaving faces empty) if Euler's formula fails.
    bool trace_faces();
};

/// Replaces every crossing by a degree-4 dummy vertex whose rotation is the
/// crossing's cw_endpoints order.  Faces are traced; throws
/// InvalidInputError if the rotation system is not planar or disconnected.
PlanarGraph planarize(const OnePlaneEmbedding& e);

/// Adds one Face vertex per face of p and a Radial edge per boundary
/// incidence, bisecting the face's occurrence in each rotation.  Re-traces
/// faces and re-verifies Euler's formula.
PlanarGraph radialize(const PlanarGraph& p);

/// One entry per crossed G-edge.
struct CrossedEdge {
    EdgeId g_edge;
    VertexId u, v;      // G endpoints (Lambda vertex ids, which equal G ids)
    VertexId dummy;     // Lambda vertex id of the crossing dummy
};

std::vector<CrossedEdge> crossed_edge_map(const OnePlaneEmbedding& e, const PlanarGraph& lambda);

/// Convenience: planarize + radialize.
PlanarGraph radial_planarization(const OnePlaneEmbedding& e);

} // namespace onepl
