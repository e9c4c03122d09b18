#include "onepl/planar_graph.h"

#include <algorithm>
#include <queue>

#include "onepl/errors.h"

namespace onepl {

// ── Rotation plumbing ───────────────────────────────────────────────

VertexId PlanarGraph::add_vertex(VertexKind kind, int ref) {
    vertices.push_back({kind, ref});
    any_end.push_back(kNone);
    return num_vertices() - 1;
}

namespace {

void splice_after(std::vector<int>& cw_next, std::vector<int>& cw_prev, int after, int end) {
    int nxt = cw_next[after];
    cw_next[after] = end;
    cw_prev[end] = after;
    cw_next[end] = nxt;
    cw_prev[nxt] = end;
}

} // namespace

EdgeId PlanarGraph::add_edge(VertexId u, VertexId v, EdgeKind kind, int after_u, int after_v) {
    EdgeId id = num_edges();
    edges.push_back({u, v, kind});
    cw_next.resize(2 * id + 2);
    cw_prev.resize(2 * id + 2);
    int eu = 2 * id, ev = 2 * id + 1;

    auto attach = [&](VertexId w, int end, int after) {
        if (any_end[w] == kNone) {
            any_end[w] = end;
            cw_next[end] = end;
            cw_prev[end] = end;
        } else {
            splice_after(cw_next, cw_prev, after == kNone ? cw_prev[any_end[w]] : after, end);
        }
    };
    attach(u, eu, after_u);
    attach(v, ev, after_v);
    return id;
}

int PlanarGraph::face_next(int halfedge) const {
    // The arriving half-edge is the edge-end at the arrival vertex; depart
    // along the clockwise-next end, traversed away from that vertex.
    int next_end = cw_next[halfedge];
    EdgeId e = next_end >> 1;
    int side = next_end & 1;
    return 2 * e + (1 - side);
}

std::vector<EdgeId> PlanarGraph::rotation_of(VertexId v) const {
    std::vector<EdgeId> out;
    if (any_end[v] == kNone) return out;
    int start = any_end[v];
    int cur = start;
    do {
        out.push_back(cur >> 1);
        cur = cw_next[cur];
    } while (cur != start);
    return out;
}

std::vector<VertexId> PlanarGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId e : rotation_of(v)) out.push_back(edge_other(e, v));
    return out;
}

bool PlanarGraph::is_connected() const {
    if (vertices.empty()) return false;
    std::vector<bool> seen(num_vertices(), false);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = true;
    int cnt = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                q.push(w);
            }
        }
    }
    return cnt == num_vertices();
}

bool PlanarGraph::trace_faces() {
    faces.clear();
    const int ends = 2 * num_edges();
    std::vector<bool> used(ends, false);
    for (int h = 0; h < ends; ++h) {
        if (used[h]) continue;
        std::vector<int> walk;
        int cur = h;
        do {
            used[cur] = true;
            walk.push_back(cur);
            cur = face_next(cur);
        } while (cur != h);
        faces.push_back(std::move(walk));
    }
    // Euler: V - E + F = 2 for a connected genus-0 rotation system.
    long long euler = static_cast<long long>(num_vertices()) - num_edges() + num_faces();
    if (euler != 2 || !is_connected()) {
        faces.clear();
        return false;
    }
    return true;
}

// ── Planarization ───────────────────────────────────────────────────

PlanarGraph planarize(const OnePlaneEmbedding& e) {
    PlanarGraph p;
    for (VertexId v = 0; v < e.n; ++v) p.add_vertex(VertexKind::Original, v);

    const int m = e.num_edges();
    std::vector<int> crossing_of(m, kNone);
    for (int c = 0; c < e.num_crossings(); ++c) {
        crossing_of[e.crossings[c].edge_a] = c;
        crossing_of[e.crossings[c].edge_b] = c;
    }

    // Dummy vertices first so their ids are stable.
    p.crossing_images.resize(e.num_crossings());
    for (int c = 0; c < e.num_crossings(); ++c) {
        p.crossing_images[c].dummy = p.add_vertex(VertexKind::Dummy, c);
        p.crossing_images[c].spoke = {kNone, kNone, kNone, kNone};
    }

    // Each G edge-end becomes one edge-end of p.  A crossed edge (u,v) turns
    // into spokes (u,dummy) and (v,dummy); an uncrossed edge is kept.  Edges
    // are created when their second end is reached, so rotations are built
    // vertex by vertex in the embedding's clockwise order.
    std::vector<EdgeId> uncrossed_image(m, kNone);
    std::vector<std::array<EdgeId, 2>> spoke_of(m, {kNone, kNone});   // per crossed edge endpoint side

    auto append_end = [&](VertexId v, int end) {
        if (p.any_end[v] == kNone) {
            p.any_end[v] = end;
            p.cw_next[end] = end;
            p.cw_prev[end] = end;
        } else {
            splice_after(p.cw_next, p.cw_prev, p.cw_prev[p.any_end[v]], end);
        }
    };

    for (VertexId v = 0; v < e.n; ++v) {
        for (EdgeId id : e.rotations[v]) {
            int side = (e.edges[id].first == v) ? 0 : 1;
            if (crossing_of[id] == kNone) {
                if (uncrossed_image[id] == kNone) {
                    EdgeId ne = p.num_edges();
                    p.edges.push_back({v, kNone, EdgeKind::Plain});
                    p.cw_next.resize(2 * ne + 2);
                    p.cw_prev.resize(2 * ne + 2);
                    uncrossed_image[id] = ne;
                    append_end(v, 2 * ne);
                } else {
                    EdgeId ne = uncrossed_image[id];
                    p.edges[ne].v = v;
                    append_end(v, 2 * ne + 1);
                }
            } else {
                // Spoke toward the dummy; the dummy side is attached later.
                VertexId dummy = p.crossing_images[crossing_of[id]].dummy;
                EdgeId ne = p.num_edges();
                p.edges.push_back({v, dummy, EdgeKind::Plain});
                p.cw_next.resize(2 * ne + 2);
                p.cw_prev.resize(2 * ne + 2);
                spoke_of[id][side] = ne;
                append_end(v, 2 * ne);
            }
        }
    }

    p.g_edge_image.assign(m, {kNone, kNone});
    for (EdgeId id = 0; id < m; ++id) {
        if (crossing_of[id] == kNone) {
            p.g_edge_image[id] = {uncrossed_image[id], uncrossed_image[id]};
        } else {
            p.g_edge_image[id] = spoke_of[id];
        }
    }

    // Dummy rotations follow cw_endpoints verbatim.
    for (int c = 0; c < e.num_crossings(); ++c) {
        const CrossingSpec& cs = e.crossings[c];
        VertexId dummy = p.crossing_images[c].dummy;
        for (int t = 0; t < 4; ++t) {
            VertexId pt = cs.cw_endpoints[t];
            EdgeId ed = (t % 2 == 0) ? cs.edge_a : cs.edge_b;
            int side = (e.edges[ed].first == pt) ? 0 : 1;
            EdgeId spoke = spoke_of[ed][side];
            p.crossing_images[c].spoke[t] = spoke;
            append_end(dummy, 2 * spoke + 1);
        }
    }

    if (!p.trace_faces())
        throw InvalidInputError(p.is_connected() ? "nonplanar rotation system"
                                                 : "disconnected planarization");
    return p;
}

// ── Radial planarization ────────────────────────────────────────────

PlanarGraph radialize(const PlanarGraph& p) {
    PlanarGraph r = p;
    const std::vector<std::vector<int>> walks = r.faces;

    for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
        VertexId fv = r.add_vertex(VertexKind::Face, f);

        // One radial edge per corner.  A corner is identified by its
        // arriving half-edge h: it lies between h's end at the corner
        // vertex and that end's clockwise successor; inserting the radial
        // end right after h bisects the face's occurrence in the rotation.
        // The walk traverses the face with its interior on the left, so
        // seen from the face vertex the corners appear counterclockwise;
        // the clockwise rotation at fv is the reversed walk order.
        std::vector<EdgeId> radial;
        radial.reserve(walks[f].size());
        for (int h : walks[f]) {
            VertexId v = r.end_vertex(h);
            EdgeId ne = r.num_edges();
            r.edges.push_back({v, fv, EdgeKind::Radial});
            r.cw_next.resize(2 * ne + 2);
            r.cw_prev.resize(2 * ne + 2);
            splice_after(r.cw_next, r.cw_prev, h, 2 * ne);
            radial.push_back(ne);
        }
        for (auto it = radial.rbegin(); it != radial.rend(); ++it) {
            int end = 2 * *it + 1;
            if (r.any_end[fv] == kNone) {
                r.any_end[fv] = end;
                r.cw_next[end] = end;
                r.cw_prev[end] = end;
            } else {
                splice_after(r.cw_next, r.cw_prev, r.cw_prev[r.any_end[fv]], end);
            }
        }
    }

    if (!r.trace_faces())
        throw InternalInvariantError("radialization produced a nonplanar rotation system");
    return r;
}

PlanarGraph radial_planarization(const OnePlaneEmbedding& e) {
    return radialize(planarize(e));
}

std::vector<CrossedEdge> crossed_edge_map(const OnePlaneEmbedding& e, const PlanarGraph& lambda) {
    std::vector<CrossedEdge> out;
    out.reserve(2 * e.num_crossings());
    for (int c = 0; c < e.num_crossings(); ++c) {
        const CrossingSpec& cs = e.crossings[c];
        VertexId dummy = lambda.crossing_images[c].dummy;
        for (EdgeId ge : {cs.edge_a, cs.edge_b}) {
            out.push_back({ge, e.edges[ge].first, e.edges[ge].second, dummy});
        }
    }
    return out;
}

} // namespace onepl
