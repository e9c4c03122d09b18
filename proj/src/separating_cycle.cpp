#include "onepl/separating_cycle.h"

#include <algorithm>
#include <queue>
#include <set>

#include "onepl/errors.h"
#include "onepl/oracle.h"
#include "onepl/simple_graph.h"

namespace onepl {

namespace {

struct CycleBuilder {
    const OnePlaneEmbedding& e;   // kite-completed
    PlanarGraph gx;               // planarization with faces
    PlanarGraph lambda;           // radialization
    std::vector<int> flap;        // per G-vertex, -1 on S
    std::vector<bool> in_s;
    std::vector<int> face_of_half;        // G^x half -> face index
    std::vector<VertexId> face_vertex;    // face index -> Lambda face vertex
    std::vector<bool> transition;         // per face
    std::vector<int> crossing_of_edge;    // per G-edge

    explicit CycleBuilder(const OnePlaneEmbedding& emb, const std::vector<VertexId>& s)
        : e(emb), gx(planarize(emb)), lambda(radialize(gx)) {
        in_s.assign(e.n, false);
        for (VertexId v : s) in_s[v] = true;

        SimpleGraph g = simple_graph_of(e);
        std::vector<bool> removed(e.n, false);
        for (VertexId v : s) removed[v] = true;
        auto [comp, count] = components_without(g, removed);
        if (count < 2) throw InvalidInputError("full_cycle: set does not separate");
        flap = comp;

        crossing_of_edge.assign(e.num_edges(), kNone);
        for (int c = 0; c < e.num_crossings(); ++c) {
            crossing_of_edge[e.crossings[c].edge_a] = c;
            crossing_of_edge[e.crossings[c].edge_b] = c;
        }

        face_of_half.assign(2 * gx.num_edges(), -1);
        for (int f = 0; f < gx.num_faces(); ++f)
            for (int h : gx.faces[f]) face_of_half[h] = f;
        face_vertex.assign(gx.num_faces(), kNone);
        for (VertexId v = 0; v < lambda.num_vertices(); ++v)
            if (lambda.vertices[v].kind == VertexKind::Face)
                face_vertex[lambda.vertices[v].ref] = v;

        mark_transition_faces();
    }

    bool is_g_vertex(VertexId lv) const {
        return lambda.vertices[lv].kind == VertexKind::Original;
    }

    void mark_transition_faces() {
        transition.assign(gx.num_faces(), false);
        for (int f = 0; f < gx.num_faces(); ++f) {
            int seen_flap = -2;
            int s_incidences = 0;
            for (int h : gx.faces[f]) {
                const auto& ge = gx.edges[h >> 1];
                if (gx.vertices[ge.u].kind == VertexKind::Original &&
                    gx.vertices[ge.v].kind == VertexKind::Original && in_s[ge.u] && in_s[ge.v])
                    transition[f] = true;   // boundary edge inside S
                VertexId v = gx.end_vertex(h);
                if (gx.vertices[v].kind != VertexKind::Original) continue;
                if (in_s[v]) {
                    ++s_incidences;
                } else if (seen_flap == -2) {
                    seen_flap = flap[v];
                } else if (flap[v] != seen_flap) {
                    transition[f] = true;   // vertices of two flaps
                }
            }
            if (transition[f] && s_incidences < 2)
                throw InternalInvariantError(
                    "transition face with fewer than two S-incidences");
        }
    }

    // G^x image end of e.rotations[v][idx] at v.
    int image_end(VertexId v, int idx) const {
        const int deg = static_cast<int>(e.rotations[v].size());
        EdgeId ge = e.rotations[v][((idx % deg) + deg) % deg];
        int side = (e.edges[ge].first == v) ? 0 : 1;
        EdgeId img = gx.g_edge_image[ge][side];
        return 2 * img + (gx.edges[img].v == v ? 1 : 0);
    }

    // The radial edge bisecting the corner after rotation position idx.
    EdgeId radial_at_corner(VertexId v, int idx) const {
        int end = image_end(v, idx);
        int radial_end = lambda.cw_next[end];
        EdgeId re = radial_end >> 1;
        if (lambda.edges[re].kind != EdgeKind::Radial)
            throw InternalInvariantError("corner has no radial edge");
        return re;
    }

    int cell_at_corner(VertexId v, int idx) const { return face_of_half[image_end(v, idx)]; }

    // Rotation position of the corner a radial edge of Lambda bisects.
    int corner_of_radial(VertexId v, EdgeId re) const {
        int end = lambda.end_of(re, v);
        int arrival = lambda.cw_prev[end];
        const int deg = static_cast<int>(e.rotations[v].size());
        for (int q = 0; q < deg; ++q)
            if (image_end(v, q) == arrival) return q;
        throw InternalInvariantError("radial edge does not bisect a corner");
    }

    // True iff corner position q lies in the clockwise arc from the edge
    // toward t1 up to (excluding) the edge toward t2.
    bool corner_in_arc(VertexId v, int q, VertexId t1, VertexId t2) const {
        const auto& rot = e.rotations[v];
        const int deg = static_cast<int>(rot.size());
        int start = -1;
        for (int i = 0; i < deg; ++i)
            if (e.other_endpoint(rot[i], v) == t1) {
                start = i;
                break;
            }
        for (int step = 0; step < deg; ++step) {
            int i = (start + step) % deg;
            if (e.other_endpoint(rot[i], v) == t2) return false;
            if (i == q) return true;
        }
        return false;
    }

    // Rotation scan for the transition face clockwise between (v,t1)
    // and (v,t2).
    // Returns (face index, the radial edge of that corner at v).
    std::pair<int, EdgeId> transition_between(VertexId v, VertexId t1, VertexId t2) const {
        const auto& rot = e.rotations[v];
        const int deg = static_cast<int>(rot.size());
        int start = -1;
        for (int q = 0; q < deg; ++q)
            if (e.other_endpoint(rot[q], v) == t1) {
                start = q;
                break;
            }
        if (start == -1) throw InternalInvariantError("t1 not adjacent to v");
        int p = start;
        for (int step = 0; step < deg; ++step) {
            int q = (start + step) % deg;
            VertexId w = e.other_endpoint(rot[q], v);
            if (w == t2) break;
            if (!in_s[w] && flap[w] == flap[t1]) p = q;
        }
        // entries p, cell F, p+1, cell F', p+2
        EdgeId edge_w = rot[p % deg];
        EdgeId edge_w2 = rot[(p + 1) % deg];
        int corner;
        if (crossing_of_edge[edge_w2] != kNone) {
            corner = p + 1;   // F'
        } else if (crossing_of_edge[edge_w] != kNone) {
            corner = p;       // F
        } else {
            corner = p;       // F
        }
        int f = cell_at_corner(v, corner);
        if (!transition[f])
            throw InternalInvariantError("clockwise-between scan left a non-transition face");
        return {f, radial_at_corner(v, corner)};
    }
};

} // namespace

SeparatingCycle full_cycle(const OnePlaneEmbedding& e_in, const std::vector<VertexId>& s) {
    ValidationReport rep = validate(e_in);
    if (!rep.ok()) throw InvalidInputError("full_cycle: invalid embedding: " + rep.joined());
    for (int c = 0; c < e_in.num_crossings(); ++c)
        if (classify_crossing(e_in, c).cls != CrossingClass::Full)
            throw InvalidInputError("full_cycle: crossing " + std::to_string(c) + " is not full");
    {
        SimpleGraph g = simple_graph_of(e_in);
        if (!verify_separator(g, s)) throw InvalidInputError("full_cycle: set does not separate");
        for (size_t i = 0; i < s.size(); ++i) {
            std::vector<VertexId> t = s;
            t.erase(t.begin() + i);
            if (verify_separator(g, t))
                throw InvalidInputError("full_cycle: separating set is not minimal");
        }
    }

    OnePlaneEmbedding e = add_kite_edges(e_in);
    CycleBuilder cb(e, s);
    const PlanarGraph& lambda = cb.lambda;

    // Maximal alternating path P.
    std::vector<VertexId> path;       // Lambda ids
    std::vector<EdgeId> path_edges;   // path_edges[i] joins path[i-1], path[i]
    std::vector<bool> on_path(lambda.num_vertices(), false);
    std::set<EdgeId> edges_on_path;

    VertexId v1 = *std::min_element(s.begin(), s.end());
    path.push_back(v1);
    on_path[v1] = true;

    auto try_extend = [&]() -> bool {
        VertexId vk = path.back();
        for (EdgeId re : lambda.rotation_of(vk)) {
            if (lambda.edges[re].kind != EdgeKind::Radial) continue;
            VertexId f = lambda.edge_other(re, vk);
            if (on_path[f] || !cb.transition[lambda.vertices[f].ref]) continue;
            for (EdgeId re2 : lambda.rotation_of(f)) {
                VertexId v2 = lambda.edge_other(re2, f);
                if (!cb.is_g_vertex(v2) || !cb.in_s[v2] || on_path[v2]) continue;
                path.push_back(f);
                path_edges.push_back(re);
                path.push_back(v2);
                path_edges.push_back(re2);
                on_path[f] = on_path[v2] = true;
                edges_on_path.insert(re);
                edges_on_path.insert(re2);
                return true;
            }
        }
        return false;
    };
    while (try_extend()) {
    }

    // Close the path into a cycle.
    VertexId vk = path.back();
    VertexId t1 = kNone, t2 = kNone;
    for (EdgeId ge : e.rotations[vk]) {
        VertexId w = e.other_endpoint(ge, vk);
        if (cb.in_s[w]) continue;
        if (t1 == kNone) {
            t1 = w;
        } else if (cb.flap[w] != cb.flap[t1]) {
            t2 = w;
            break;
        }
    }
    if (t2 == kNone)
        throw InternalInvariantError("minimal separating vertex lacks neighbours in two flaps");

    // Rename t1/t2 so that the arrival corner of P sits in the complement
    // of the arc the closing corner is taken from; the cycle then leaves the
    // (v_k, t1) and (v_k, t2) edges on opposite sides.
    if (path.size() > 1) {
        int q_prev = cb.corner_of_radial(vk, path_edges.back());
        if (cb.corner_in_arc(vk, q_prev, t1, t2)) std::swap(t1, t2);
    }
    auto [face, re] = cb.transition_between(vk, t1, t2);
    if (edges_on_path.count(re))
        throw InternalInvariantError("closing corner already on the path");

    VertexId fv = cb.face_vertex[face];
    std::vector<VertexId> cycle;
    std::vector<EdgeId> cycle_edges;
    if (on_path[fv]) {
        // Case 1: the face vertex lies on P; close with one edge.
        size_t idx = std::find(path.begin(), path.end(), fv) - path.begin();
        cycle.assign(path.begin() + idx, path.end());
        cycle_edges.assign(path_edges.begin() + idx, path_edges.end());
        cycle_edges.push_back(re);
    } else {
        // By maximality every S-neighbour of fv is on P.
        EdgeId closing = kNone;
        for (EdgeId cand : lambda.rotation_of(fv)) {
            if (cand == re) continue;
            VertexId v2 = lambda.edge_other(cand, fv);
            if (cb.is_g_vertex(v2) && cb.in_s[v2]) {
                closing = cand;
                break;
            }
        }
        if (closing == kNone)
            throw InternalInvariantError("transition face lost its second S-edge");
        VertexId vi = lambda.edge_other(closing, fv);
        if (vi == vk) {
            // Case 3: two parallel radial edges form the cycle.
            cycle = {vk, fv};
            cycle_edges = {re, closing};
        } else {
            // Case 2: run along P from v_i, then through fv.
            size_t idx = std::find(path.begin(), path.end(), vi) - path.begin();
            cycle.assign(path.begin() + idx, path.end());
            cycle_edges.assign(path_edges.begin() + idx, path_edges.end());
            cycle.push_back(fv);
            cycle_edges.push_back(re);
            cycle_edges.push_back(closing);
        }
    }

    // Sides: classify the edge-ends strictly between the cycle's corners.
    const int L = static_cast<int>(cycle.size());
    std::vector<int> side(lambda.num_vertices(), -1);
    std::vector<std::pair<VertexId, int>> seeds;
    for (int t = 0; t < L; ++t) {
        VertexId v = cycle[t];
        EdgeId e_in = cycle_edges[(t + L - 1) % L];
        EdgeId e_out = cycle_edges[t];
        int in_end = lambda.end_of(e_in, v);
        int out_end = lambda.end_of(e_out, v);
        int cur = lambda.cw_next[in_end];
        int which = 0;
        while (cur != in_end) {
            if (cur == out_end) {
                which = 1;
            } else {
                seeds.push_back({lambda.edge_other(cur >> 1, v), which});
            }
            cur = lambda.cw_next[cur];
        }
    }
    for (VertexId v : cycle) side[v] = 2;   // cycle marker
    std::queue<VertexId> bfs;
    for (auto [v, w] : seeds) {
        if (side[v] == 2) continue;
        if (side[v] == -1) {
            side[v] = w;
            bfs.push(v);
        } else if (side[v] != w) {
            throw InternalInvariantError("cycle side classification conflict");
        }
    }
    while (!bfs.empty()) {
        VertexId v = bfs.front();
        bfs.pop();
        for (VertexId u : lambda.neighbors(v)) {
            if (side[u] == -1) {
                side[u] = side[v];
                bfs.push(u);
            }
        }
    }

    SeparatingCycle out;
    out.cycle = cycle;
    out.cycle_edges = cycle_edges;
    for (VertexId v = 0; v < lambda.num_vertices(); ++v) {
        if (side[v] == 0) out.side_a.push_back(v);
        if (side[v] == 1) out.side_b.push_back(v);
    }

    // Postconditions.
    for (EdgeId ce : cycle_edges)
        if (lambda.edges[ce].kind != EdgeKind::Radial)
            throw InternalInvariantError("cycle uses a non-radial edge");
    std::vector<VertexId> vg;
    for (VertexId v : cycle) {
        if (lambda.vertices[v].kind == VertexKind::Dummy)
            throw InternalInvariantError("cycle visits a dummy vertex");
        if (lambda.vertices[v].kind == VertexKind::Original) vg.push_back(v);
    }
    std::sort(vg.begin(), vg.end());
    std::vector<VertexId> ss = s;
    std::sort(ss.begin(), ss.end());
    if (vg != ss) throw InternalInvariantError("cycle G-vertices differ from S");
    auto has_g = [&](const std::vector<VertexId>& vs) {
        for (VertexId v : vs)
            if (lambda.vertices[v].kind == VertexKind::Original) return true;
        return false;
    };
    if (!has_g(out.side_a) || !has_g(out.side_b))
        throw InternalInvariantError("cycle does not have G-vertices on both sides");

    out.lambda = std::move(cb.lambda);
    return out;
}

} // namespace onepl
