#include "onepl/embedding.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "onepl/errors.h"
#include "onepl/planar_graph.h"
#include "onepl/simple_graph.h"

namespace onepl {

std::string to_string(CrossingClass c) {
    switch (c) {
        case CrossingClass::Full: return "full";
        case CrossingClass::AlmostFull: return "almost-full";
        case CrossingClass::Bowtie: return "bowtie";
        case CrossingClass::Arrow: return "arrow";
        case CrossingClass::Chair: return "chair";
        case CrossingClass::XCross: return "x-cross";
    }
    return "?";
}

std::string ValidationReport::joined() const {
    std::ostringstream os;
    for (size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i];
    }
    return os.str();
}

// ── Validation ──────────────────────────────────────────────────────

ValidationReport validate(const OnePlaneEmbedding& e) {
    ValidationReport rep;
    auto bad = [&](const std::string& s) { rep.violations.push_back(s); };

    if (e.n <= 0) {
        bad("no vertices");
        return rep;
    }
    const int m = e.num_edges();

    bool ids_ok = true;
    for (int i = 0; i < m; ++i) {
        auto [u, v] = e.edges[i];
        if (u < 0 || u >= e.n || v < 0 || v >= e.n) {
            bad("edge " + std::to_string(i) + " has endpoint out of range");
            ids_ok = false;
        } else if (u == v) {
            bad("edge " + std::to_string(i) + " is a loop");
            ids_ok = false;
        }
    }
    if (static_cast<int>(e.rotations.size()) != e.n) {
        bad("rotation list count differs from vertex count");
        ids_ok = false;
    }
    if (!ids_ok) return rep;

    // Each edge must appear exactly once in each endpoint's rotation.
    std::vector<int> seen_at_u(m, 0), seen_at_v(m, 0);
    bool rot_ok = true;
    for (VertexId v = 0; v < e.n; ++v) {
        for (EdgeId id : e.rotations[v]) {
            if (id < 0 || id >= m) {
                bad("rotation of vertex " + std::to_string(v) + " names unknown edge");
                rot_ok = false;
                continue;
            }
            if (e.edges[id].first == v) {
                ++seen_at_u[id];
            } else if (e.edges[id].second == v) {
                ++seen_at_v[id];
            } else {
                bad("rotation of vertex " + std::to_string(v) + " names non-incident edge " +
                    std::to_string(id));
                rot_ok = false;
            }
        }
    }
    for (int i = 0; i < m && rot_ok; ++i) {
        if (seen_at_u[i] != 1 || seen_at_v[i] != 1) {
            bad("edge " + std::to_string(i) + " does not appear exactly once per endpoint rotation");
            rot_ok = false;
        }
    }
    if (!rot_ok) return rep;

    // Crossing specs.
    std::vector<int> cross_count(m, 0);
    bool cross_ok = true;
    for (int c = 0; c < e.num_crossings(); ++c) {
        const CrossingSpec& cs = e.crossings[c];
        if (cs.edge_a < 0 || cs.edge_a >= m || cs.edge_b < 0 || cs.edge_b >= m) {
            bad("crossing " + std::to_string(c) + " names unknown edge");
            cross_ok = false;
            continue;
        }
        if (cs.edge_a == cs.edge_b) {
            bad("crossing " + std::to_string(c) + " crosses an edge with itself");
            cross_ok = false;
            continue;
        }
        ++cross_count[cs.edge_a];
        ++cross_count[cs.edge_b];

        std::set<VertexId> pts(cs.cw_endpoints.begin(), cs.cw_endpoints.end());
        std::set<VertexId> expect{e.edges[cs.edge_a].first, e.edges[cs.edge_a].second,
                                  e.edges[cs.edge_b].first, e.edges[cs.edge_b].second};
        if (pts.size() != 4 || expect.size() != 4) {
            bad("crossing " + std::to_string(c) + " endpoints are not four distinct vertices");
            cross_ok = false;
            continue;
        }
        if (pts != expect) {
            bad("crossing " + std::to_string(c) + " cw endpoints do not match its edges");
            cross_ok = false;
            continue;
        }
        auto is_end_of = [&](VertexId x, EdgeId ed) {
            return e.edges[ed].first == x || e.edges[ed].second == x;
        };
        if (!is_end_of(cs.cw_endpoints[0], cs.edge_a) || !is_end_of(cs.cw_endpoints[2], cs.edge_a) ||
            !is_end_of(cs.cw_endpoints[1], cs.edge_b) || !is_end_of(cs.cw_endpoints[3], cs.edge_b)) {
            bad("crossing " + std::to_string(c) + " cw endpoints do not alternate between its edges");
            cross_ok = false;
        }
    }
    for (int i = 0; i < m; ++i) {
        if (cross_count[i] > 1) {
            bad("edge " + std::to_string(i) + " crossed twice");
            cross_ok = false;
        }
    }
    if (!cross_ok) return rep;

    // Geometric checks through the planarization.
    try {
        PlanarGraph p = planarize(e);
        (void)p;
    } catch (const InvalidInputError& err) {
        bad(err.what());
        return rep;
    }

    // Simple inputs obey the 1-planar edge bound.
    std::set<std::pair<VertexId, VertexId>> simple;
    bool is_simple = true;
    for (auto [u, v] : e.edges) {
        if (!simple.insert({std::min(u, v), std::max(u, v)}).second) is_simple = false;
    }
    if (is_simple && e.n >= 3 && m > 4 * e.n - 8) {
        bad("simple graph exceeds the 4n-8 edge bound");
    }
    return rep;
}

// ── Crossing classification ─────────────────────────────────────────

namespace {

// Adjacency anywhere in the drawing (kite edges may be drawn elsewhere).
bool adjacent_in_g(const OnePlaneEmbedding& e, VertexId a, VertexId b) {
    for (auto [u, v] : e.edges)
        if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
}

} // namespace

CrossingInfo classify_crossing(const OnePlaneEmbedding& e, CrossingId c) {
    if (c < 0 || c >= e.num_crossings())
        throw InvalidInputError("unknown crossing id " + std::to_string(c));
    const auto& pts = e.crossings[c].cw_endpoints;

    // adj[t]: endpoints pts[t] and pts[(t+1)%4] are adjacent somewhere in G.
    std::array<bool, 4> adj{};
    int count = 0;
    for (int t = 0; t < 4; ++t) {
        adj[t] = adjacent_in_g(e, pts[t], pts[(t + 1) % 4]);
        if (adj[t]) ++count;
    }
    // Per-endpoint count of adjacent consecutive endpoints (0..2).
    std::array<int, 4> deg{};
    for (int t = 0; t < 4; ++t) {
        deg[t] = (adj[t] ? 1 : 0) + (adj[(t + 3) % 4] ? 1 : 0);
    }

    CrossingInfo info{};
    switch (count) {
        case 4:
            info.cls = CrossingClass::Full;
            break;
        case 3: {
            info.cls = CrossingClass::AlmostFull;
            // Wing tips are the two consecutive non-adjacent endpoints.
            int t = 0;
            while (adj[t]) ++t;
            info.wing_tips = {pts[t], pts[(t + 1) % 4]};
            info.spine_vertices = {pts[(t + 2) % 4], pts[(t + 3) % 4]};
            break;
        }
        case 2: {
            // Opposite pairs form a cycle (bowtie); pairs sharing an
            // endpoint form K_{1,3} plus an edge (arrow).
            if ((adj[0] && adj[2]) || (adj[1] && adj[3])) {
                info.cls = CrossingClass::Bowtie;
            } else {
                info.cls = CrossingClass::Arrow;
                int nb = 0;
                for (int t = 0; t < 4; ++t) {
                    if (deg[t] == 2) info.tip = pts[t];
                    else if (deg[t] == 0) info.tail = pts[t];
                    else info.base_vertices[nb++] = pts[t];
                }
            }
            break;
        }
        case 1:
            info.cls = CrossingClass::Chair;
            break;
        default:
            info.cls = CrossingClass::XCross;
            break;
    }
    return info;
}

bool has_x_crossing(const OnePlaneEmbedding& e) {
    for (int c = 0; c < e.num_crossings(); ++c)
        if (classify_crossing(e, c).cls == CrossingClass::XCross) return true;
    return false;
}

// ── Kite-edge pre-processing ────────────────────────────────────────

namespace {

int rotation_index_of(const std::vector<EdgeId>& rot, EdgeId id) {
    auto it = std::find(rot.begin(), rot.end(), id);
    return static_cast<int>(it - rot.begin());
}

EdgeId crossing_edge_at(const CrossingSpec& cs, int t) {
    return (t % 2 == 0) ? cs.edge_a : cs.edge_b;
}

} // namespace

// Pair t of crossing c is the consecutive endpoints (a, b) with
// a = cw_endpoints[t], b = cw_endpoints[t+1]; b follows a clockwise around
// the crossing point.  The pair sits in kite position iff the corner of the
// planarization between the two crossed edge-ends is closed off by an edge
// (a, b): clockwise-after the crossed end at b comes an (a,b)-edge whose
// other end is immediately clockwise-before the crossed end at a.
bool pair_in_kite_position(const OnePlaneEmbedding& e, CrossingId c, int t) {
    const CrossingSpec& cs = e.crossings[c];
    VertexId a = cs.cw_endpoints[t];
    VertexId b = cs.cw_endpoints[(t + 1) % 4];
    EdgeId ea = crossing_edge_at(cs, t);
    EdgeId eb = crossing_edge_at(cs, t + 1);

    const auto& rot_b = e.rotations[b];
    int ib = rotation_index_of(rot_b, eb);
    EdgeId cand = rot_b[(ib + 1) % rot_b.size()];
    if (cand == eb) return false;   // degree-1 vertex
    if (e.other_endpoint(cand, b) != a) return false;

    const auto& rot_a = e.rotations[a];
    int ic = rotation_index_of(rot_a, cand);
    return rot_a[(ic + 1) % rot_a.size()] == ea;
}

OnePlaneEmbedding add_kite_edges(const OnePlaneEmbedding& e) {
    if (has_x_crossing(e)) throw XCrossingError("x-crossing present; kite pre-processing refused");

    OnePlaneEmbedding out = e;
    for (int c = 0; c < out.num_crossings(); ++c) {
        const CrossingSpec cs = out.crossings[c];
        for (int t = 0; t < 4; ++t) {
            VertexId a = cs.cw_endpoints[t];
            VertexId b = cs.cw_endpoints[(t + 1) % 4];
            if (!adjacent_in_g(out, a, b)) continue;
            if (pair_in_kite_position(out, c, t)) continue;

            EdgeId dup = out.num_edges();
            out.edges.emplace_back(a, b);
            // Insert on the side facing the crossing: clockwise-before the
            // crossed end at a, clockwise-after the crossed end at b.
            auto& rot_a = out.rotations[a];
            rot_a.insert(rot_a.begin() + rotation_index_of(rot_a, crossing_edge_at(cs, t)), dup);
            auto& rot_b = out.rotations[b];
            rot_b.insert(rot_b.begin() + rotation_index_of(rot_b, crossing_edge_at(cs, t + 1)) + 1,
                         dup);
        }
    }
    return out;
}

} // namespace onepl
