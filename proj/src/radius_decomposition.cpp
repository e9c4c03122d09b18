#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "onepl/errors.h"
#include "onepl/tree_decomposition.h"

namespace onepl {

// Guaranteed-width construction: materialize the window as an embedded
// plane graph by contracting Lambda(G) (upper layers into r_{i-1} and lower
// layers into their BFS ancestors, which reproduces the U/L sets), then
// triangulate it and take one bag per triangle, the union of the BFS root
// paths of its corners.  The decomposition tree is the dual spanning tree
// complementary to the BFS tree, so the width is at most 3*(w+3)-1.

namespace {

struct Contraction {
    const PlanarGraph& g;
    std::vector<int> nxt, prv, any;
    std::vector<bool> edge_alive;
    std::vector<VertexId> rep;

    explicit Contraction(const PlanarGraph& lambda)
        : g(lambda), nxt(lambda.cw_next), prv(lambda.cw_prev), any(lambda.any_end),
          edge_alive(lambda.num_edges(), true), rep(lambda.num_vertices()) {
        std::iota(rep.begin(), rep.end(), 0);
    }

    VertexId find(VertexId v) {
        while (rep[v] != v) {
            rep[v] = rep[rep[v]];
            v = rep[v];
        }
        return v;
    }

    VertexId owner(int end) { return find(g.end_vertex(end)); }

    void detach(int end) {
        VertexId at = owner(end);
        if (nxt[end] == end) {
            any[at] = kNone;
        } else {
            nxt[prv[end]] = nxt[end];
            prv[nxt[end]] = prv[end];
            if (any[at] == end) any[at] = nxt[end];
        }
    }

    // Merge v into u along live edge e joining their classes.
    void contract(VertexId v, VertexId u, EdgeId e) {
        int ev = 2 * e, eu = 2 * e + 1;
        if (owner(ev) != v) std::swap(ev, eu);
        edge_alive[e] = false;

        if (nxt[ev] == ev) {
            detach(eu);              // v brought no other ends
        } else {
            int first = nxt[ev], last = prv[ev];
            if (nxt[eu] == eu) {
                any[u] = first;      // u had only e
                nxt[last] = first;
                prv[first] = last;
            } else {
                int before = prv[eu], after = nxt[eu];
                nxt[before] = first;
                prv[first] = before;
                nxt[last] = after;
                prv[after] = last;
                if (any[u] == eu) any[u] = after;
            }
        }
        any[v] = kNone;
        rep[v] = u;
    }

    // Drops loops and parallel duplicates; deletion never disconnects.
    void simplify() {
        std::unordered_set<uint64_t> seen;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (!edge_alive[e]) continue;
            VertexId a = find(g.edges[e].u), b = find(g.edges[e].v);
            if (a != b) {
                uint64_t lo = std::min(a, b), hi = std::max(a, b);
                if (seen.insert((lo << 32) | hi).second) continue;
            }
            detach(2 * e);
            detach(2 * e + 1);
            edge_alive[e] = false;
        }
    }
};

} // namespace

TreeDecomposition radius_decomposition(const WindowGraph& win, const LambdaLayers& ctx) {
    if (win.stamp_id != ctx.current_stamp)
        throw InternalInvariantError("radius_decomposition: stale window");

    TreeDecomposition td;
    const int nv = win.num_vertices();
    if (nv <= 3) {
        td.bags.push_back({});
        for (int v = 0; v < nv; ++v) td.bags[0].push_back(v);
        td.tree.assign(1, {});
        return td;
    }

    const PlanarGraph& lambda = *ctx.lambda;
    const BfsLayering& bl = ctx.bl;
    const int i = win.i, w = win.w;

    // 1. Contract Lambda onto the window.
    Contraction con(lambda);
    for (int j = bl.depth; j >= i + w + 1; --j)
        for (VertexId v : bl.layer_vertices[j])
            con.contract(con.find(v), con.find(bl.parent[v]), bl.parent_edge[v]);
    if (i >= 3) {
        // Layers 1..i-2 collapse into the root, then into r_{i-1}; for
        // i == 2 the window floor is layer 1 and nothing sits above it.
        for (int j = i - 2; j >= 2; --j)
            for (VertexId v : bl.layer_vertices[j])
                con.contract(con.find(v), con.find(bl.parent[v]), bl.parent_edge[v]);
        VertexId r = ctx.aux.rep[i - 1];
        con.contract(con.find(bl.root), r, bl.parent_edge[r]);
    }
    con.simplify();

    // 2. Extract the embedded window graph over local ids.
    PlanarGraph h;
    for (int lv = 0; lv < nv; ++lv) h.add_vertex(VertexKind::Original, lv);
    std::vector<EdgeId> image(lambda.num_edges(), kNone);
    std::vector<int> pending_end(lambda.num_edges(), kNone);
    for (int lv = 0; lv < nv; ++lv) {
        VertexId gv = win.verts[lv];
        if (con.find(gv) != gv)
            throw InternalInvariantError("window contraction lost a window vertex");
        int start = con.any[gv];
        if (start == kNone) continue;
        int cur = start;
        do {
            EdgeId e = cur >> 1;
            if (image[e] == kNone) {
                image[e] = h.num_edges();
                h.edges.push_back({lv, kNone, EdgeKind::Plain});
                h.cw_next.resize(2 * image[e] + 2);
                h.cw_prev.resize(2 * image[e] + 2);
                pending_end[e] = 2 * image[e];
            } else {
                h.edges[image[e]].v = lv;
                pending_end[e] = 2 * image[e] + 1;
            }
            // append pending_end[e] to lv's rotation
            int end = pending_end[e];
            if (h.any_end[lv] == kNone) {
                h.any_end[lv] = end;
                h.cw_next[end] = end;
                h.cw_prev[end] = end;
            } else {
                int tail = h.cw_prev[h.any_end[lv]];
                h.cw_next[tail] = end;
                h.cw_prev[end] = tail;
                h.cw_next[end] = h.any_end[lv];
                h.cw_prev[h.any_end[lv]] = end;
            }
            cur = con.nxt[cur];
        } while (cur != start);
    }
    if (!h.trace_faces())
        throw InternalInvariantError("contracted window is not a plane graph");

    // 3. Fan-triangulate every face.
    std::vector<std::vector<int>> walks = h.faces;
    for (auto& walk : walks) {
        while (walk.size() > 3) {
            int h0 = walk[0], h2 = walk[2];
            VertexId a0 = h.end_vertex(h0), a2 = h.end_vertex(h2);
            EdgeId chord = h.add_edge(a0, a2, EdgeKind::Plain, h0, h2);
            std::vector<int> rest;
            rest.reserve(walk.size() - 1);
            rest.push_back(h0);
            rest.push_back(2 * chord + 1);
            rest.insert(rest.end(), walk.begin() + 3, walk.end());
            walk = std::move(rest);
        }
    }
    if (!h.trace_faces())
        throw InternalInvariantError("triangulation broke the embedding");
    for (const auto& f : h.faces)
        if (f.size() != 3)
            throw InternalInvariantError("triangulation left a non-triangular face");

    // 4. BFS tree of the triangulated window from the center.
    std::vector<int> par(nv, -2), par_edge(nv, kNone), depth(nv, 0);
    std::vector<bool> tree_edge(h.num_edges(), false);
    std::queue<int> q;
    par[win.center] = -1;
    q.push(win.center);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (EdgeId e : h.rotation_of(v)) {
            int u = h.edge_other(e, v);
            if (par[u] == -2) {
                par[u] = v;
                par_edge[u] = e;
                depth[u] = depth[v] + 1;
                tree_edge[e] = true;
                q.push(u);
            }
        }
    }
    for (int v = 0; v < nv; ++v) {
        if (par[v] == -2) throw InternalInvariantError("window not connected after contraction");
        if (depth[v] > w + 2) throw InternalInvariantError("window radius exceeds w+2");
    }

    // 5. Bags per triangle; decomposition tree = complementary dual tree.
    const int nf = h.num_faces();
    std::vector<int> face_of(2 * h.num_edges(), -1);
    for (int f = 0; f < nf; ++f)
        for (int half : h.faces[f]) face_of[half] = f;

    td.bags.assign(nf, {});
    td.tree.assign(nf, {});
    for (int f = 0; f < nf; ++f) {
        std::vector<int>& bag = td.bags[f];
        for (int half : h.faces[f])
            for (int x = h.end_vertex(half); x != -1; x = par[x]) bag.push_back(x);
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    int dual_edges = 0;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (tree_edge[e]) continue;
        int f1 = face_of[2 * e], f2 = face_of[2 * e + 1];
        td.tree[f1].push_back(f2);
        td.tree[f2].push_back(f1);
        ++dual_edges;
    }
    if (dual_edges != nf - 1)
        throw InternalInvariantError("dual co-tree is not a spanning tree");
    return td;
}

} // namespace onepl
