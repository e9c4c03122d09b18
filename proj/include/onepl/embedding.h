#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace onepl {

using VertexId = int;
using EdgeId = int;
using CrossingId = int;

constexpr int kNone = -1;

/// One crossing of a drawing: two edges plus the clockwise order of the
/// four crossing endpoints around the crossing point.  Positions 0 and 2
/// hold the ends of edge_a, positions 1 and 3 the ends of edge_b.
struct CrossingSpec {
    EdgeId edge_a = kNone;
    EdgeId edge_b = kNone;
    std::array<VertexId, 4> cw_endpoints{kNone, kNone, kNone, kNone};
};

/// Combinatorial 1-plane drawing: a rotation system plus the crossing
/// pairs.  Parallel edges are permitted, loops are not.  An edge with
/// distinct endpoints appears exactly once in each endpoint's rotation.
struct OnePlaneEmbedding {
    int n = 0;                                     // vertices of G
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::vector<EdgeId>> rotations;    // clockwise edge ids per vertex
    std::vector<CrossingSpec> crossings;

    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_crossings() const { return static_cast<int>(crossings.size()); }
    VertexId other_endpoint(EdgeId e, VertexId v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }
};

enum class CrossingClass { Full, AlmostFull, Bowtie, Arrow, Chair, XCross };

std::string to_string(CrossingClass c);

/// Classification result with the role annotations that exist for the class.
struct CrossingInfo {
    CrossingClass cls;
    // AlmostFull only:
    std::array<VertexId, 2> wing_tips{kNone, kNone};
    std::array<VertexId, 2> spine_vertices{kNone, kNone};
    // Arrow only:
    VertexId tip = kNone;
    VertexId tail = kNone;
    std::array<VertexId, 2> base_vertices{kNone, kNone};
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string joined() const;
};

/// Checks everything that downstream operations rely on: id ranges, no
/// loops, rotation/edge-end consistency, at most one crossing per edge,
/// well-formed crossing specs, a connected genus-0 planarization, and the
/// 4n-8 edge bound for simple inputs.
ValidationReport validate(const OnePlaneEmbedding& e);

/// Classifies one crossing by which consecutive endpoints are adjacent
/// anywhere in the drawing.  Throws InvalidInputError on a bad id.
CrossingInfo classify_crossing(const OnePlaneEmbedding& e, CrossingId c);

bool has_x_crossing(const OnePlaneEmbedding& e);

/// Duplicates every kite edge that is drawn away from its crossing so that
/// it also exists in kite position.  Idempotent; preserves crossing classes
/// and vertex connectivity.  Throws XCrossingError if an x-crossing is
/// present.
OnePlaneEmbedding add_kite_edges(const OnePlaneEmbedding& e);

// Test support: true iff consecutive endpoint pair `t` (pair formed by
// cw_endpoints[t], cw_endpoints[t+1 mod 4]) of crossing c is bounded by an
// edge in kite position.
bool pair_in_kite_position(const OnePlaneEmbedding& e, CrossingId c, int t);

} // namespace onepl
