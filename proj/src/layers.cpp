#include "onepl/layers.h"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "onepl/errors.h"

namespace onepl {

BfsLayering bfs_layering(const PlanarGraph& lambda) {
    if (!lambda.is_connected()) throw InvalidInputError("bfs_layering: disconnected input");
    BfsLayering bl;
    const int nv = lambda.num_vertices();
    bl.root = 0;
    bl.layer.assign(nv, 0);
    bl.parent.assign(nv, kNone);
    bl.parent_edge.assign(nv, kNone);
    bl.layer[bl.root] = 1;
    std::queue<VertexId> q;
    q.push(bl.root);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (EdgeId e : lambda.rotation_of(v)) {
            VertexId u = lambda.edge_other(e, v);
            if (bl.layer[u] == 0) {
                bl.layer[u] = bl.layer[v] + 1;
                bl.parent[u] = v;
                bl.parent_edge[u] = e;
                q.push(u);
            }
        }
    }
    bl.depth = *std::max_element(bl.layer.begin(), bl.layer.end());
    bl.layer_vertices.assign(bl.depth + 1, {});
    for (VertexId v = 0; v < nv; ++v) bl.layer_vertices[bl.layer[v]].push_back(v);

    bl.within.assign(bl.depth + 1, {});
    bl.between.assign(bl.depth + 1, {});
    for (EdgeId e = 0; e < lambda.num_edges(); ++e) {
        int lu = bl.layer[lambda.edges[e].u];
        int lv = bl.layer[lambda.edges[e].v];
        if (lu == lv) {
            bl.within[lu].push_back(e);
        } else {
            if (std::abs(lu - lv) != 1)
                throw InternalInvariantError("BFS edge spans more than one layer");
            bl.between[std::max(lu, lv)].push_back(e);
        }
    }
    return bl;
}

void build_upper_sets(const BfsLayering& bl, AuxEdges& aux) {
    aux.rep.assign(bl.depth + 1, kNone);
    aux.upper.assign(bl.depth + 1, {});
    for (int j = 1; j <= bl.depth; ++j) {
        const auto& vj = bl.layer_vertices[j];
        if (vj.empty()) continue;
        VertexId r = *std::min_element(vj.begin(), vj.end());
        aux.rep[j] = r;
        for (VertexId v : vj)
            if (v != r) aux.upper[j].push_back({r, v});
    }
}

void build_lower_sets(const PlanarGraph& lambda, const BfsLayering& bl, AuxEdges& aux) {
    aux.lower.assign(bl.depth + 1, {});
    auto key = [](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
    };

    // L_d = E_d simplified; then L_j from E_j, lifted E_{j,j+1} and lifted
    // L_{j+1}, simplified once per level.
    for (int j = bl.depth; j >= 1; --j) {
        std::unordered_set<uint64_t> seen;
        auto add = [&](VertexId a, VertexId b) {
            if (a == b) return;                       // loop after lifting
            if (!seen.insert(key(a, b)).second) return;
            aux.lower[j].push_back({a, b});
        };
        for (EdgeId e : bl.within[j]) add(lambda.edges[e].u, lambda.edges[e].v);
        if (j < bl.depth) {
            for (EdgeId e : bl.between[j + 1]) {
                VertexId v = lambda.edges[e].u, w = lambda.edges[e].v;
                if (bl.layer[v] != j) std::swap(v, w);
                add(v, bl.parent[w]);
            }
            for (auto [v, w] : aux.lower[j + 1]) add(bl.parent[v], bl.parent[w]);
        }
    }
}

LambdaLayers build_lambda_layers(const PlanarGraph& lambda, const OnePlaneEmbedding& e) {
    LambdaLayers ctx;
    ctx.lambda = &lambda;
    ctx.bl = bfs_layering(lambda);
    build_upper_sets(ctx.bl, ctx.aux);
    build_lower_sets(lambda, ctx.bl, ctx.aux);
    ctx.crossed = crossed_edge_map(e, lambda);
    ctx.crossed_at_dummy.assign(lambda.num_vertices(), {});
    for (int idx = 0; idx < static_cast<int>(ctx.crossed.size()); ++idx)
        ctx.crossed_at_dummy[ctx.crossed[idx].dummy].push_back(idx);
    ctx.local_of.assign(lambda.num_vertices(), kNone);
    ctx.stamp.assign(lambda.num_vertices(), 0);
    ctx.current_stamp = 0;
    return ctx;
}

int WindowGraph::g_vertex_count() const {
    int c = 0;
    for (bool b : is_g) c += b ? 1 : 0;
    return c;
}

std::vector<std::vector<int>> WindowGraph::adjacency() const {
    std::vector<std::vector<int>> adj(verts.size());
    for (const Edge& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return adj;
}

WindowGraph assemble_window(const LambdaLayers& ctx, int i, int w) {
    const PlanarGraph& lambda = *ctx.lambda;
    const BfsLayering& bl = ctx.bl;
    WindowGraph win;
    win.i = i;
    win.w = w;
    win.stamp_id = ctx.current_stamp + 1;

    const int lo = std::max(1, i - 1);
    const int hi = std::min(bl.depth, i + w);
    ++ctx.current_stamp;
    auto add_vertex = [&](VertexId v) {
        ctx.stamp[v] = ctx.current_stamp;
        ctx.local_of[v] = win.num_vertices();
        win.verts.push_back(v);
        win.layer.push_back(bl.layer[v]);
        win.is_g.push_back(lambda.vertices[v].kind == VertexKind::Original);
        win.x_allowed.push_back(bl.layer[v] >= i + 1 && bl.layer[v] <= i + w - 2);
    };
    for (int j = lo; j <= hi; ++j)
        for (VertexId v : bl.layer_vertices[j]) add_vertex(v);

    auto local = [&](VertexId v) { return ctx.local_of[v]; };
    auto in_window = [&](VertexId v) { return ctx.stamp[v] == ctx.current_stamp; };

    // Edges: E_{i-1,i} .. E_{i+w-1,i+w} interleaved with E_i .. E_{i+w-1},
    // then U_{i-1} and L_{i+w}.
    for (int j = std::max(1, i); j <= hi; ++j) {
        for (EdgeId e : bl.between[j]) {
            win.edges.push_back({local(lambda.edges[e].u), local(lambda.edges[e].v)});
            ++ctx.edge_touches;
        }
        if (j > i + w - 1) continue;   // E_j only for j in [i, i+w-1]
        for (EdgeId e : bl.within[j]) {
            win.edges.push_back({local(lambda.edges[e].u), local(lambda.edges[e].v)});
            ++ctx.edge_touches;
        }
    }
    if (i - 1 >= 1 && i - 1 <= bl.depth) {
        for (auto [a, b] : ctx.aux.upper[i - 1]) {
            win.edges.push_back({local(a), local(b)});
            ++ctx.edge_touches;
        }
    }
    if (i + w <= bl.depth) {
        for (auto [a, b] : ctx.aux.lower[i + w]) {
            win.edges.push_back({local(a), local(b)});
            ++ctx.edge_touches;
        }
    }

    // Center r: r_{i-1} when i >= 2, else the BFS root.
    win.center = (i >= 2 && ctx.aux.rep[i - 1] != kNone) ? local(ctx.aux.rep[i - 1])
                                                         : local(bl.root);

    // Dummy endpoint info + decomposition helper spokes.
    for (int lv = 0; lv < win.num_vertices(); ++lv) {
        VertexId v = win.verts[lv];
        if (lambda.vertices[v].kind != VertexKind::Dummy) continue;
        const auto& img = lambda.crossing_images[lambda.vertices[v].ref];
        std::array<int, 4> eps{kNone, kNone, kNone, kNone};
        for (int t = 0; t < 4; ++t) {
            VertexId nb = lambda.edge_other(img.spoke[t], v);
            if (in_window(nb)) {
                eps[t] = local(nb);
                win.td_extra.push_back({lv, eps[t]});
            }
        }
        win.dummy_endpoints.push_back({lv, eps});
    }

    // Radius bound: every window vertex reaches r within w+2 steps.
    {
        std::vector<int> dist(win.num_vertices(), -1);
        auto adj = win.adjacency();
        std::queue<int> q;
        q.push(win.center);
        dist[win.center] = 0;
        int ecc = 0, reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v])
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    ecc = std::max(ecc, dist[u]);
                    ++reached;
                    q.push(u);
                }
        }
        if (reached != win.num_vertices())
            throw InternalInvariantError("window is disconnected");
        if (ecc > w + 2)
            throw InternalInvariantError("window radius exceeds w+2");
        win.eccentricity = ecc;
    }

    // Planarity via the Euler edge bound on the underlying simple graph.
    {
        std::unordered_set<uint64_t> simple;
        for (const auto& e : win.edges) {
            uint64_t a = std::min(e.a, e.b), b = std::max(e.a, e.b);
            simple.insert((a << 32) | b);
        }
        int nv = win.num_vertices();
        if (nv >= 3 && static_cast<long long>(simple.size()) > 3LL * nv - 6)
            throw InternalInvariantError("window violates the planar edge bound");
    }
    return win;
}

WindowPlus augment_window(const LambdaLayers& ctx, WindowGraph win) {
    if (win.stamp_id != ctx.current_stamp)
        throw InternalInvariantError("augment_window: stale window (assemble another first?)");
    win.plus_begin = static_cast<int>(win.edges.size());
    auto in_window = [&](VertexId v) { return ctx.stamp[v] == ctx.current_stamp; };
    for (const auto& [dummy_local, eps] : win.dummy_endpoints) {
        for (int idx : ctx.crossed_at_dummy[win.verts[dummy_local]]) {
            const CrossedEdge& ce = ctx.crossed[idx];
            if (in_window(ce.u) && in_window(ce.v))
                win.edges.push_back({ctx.local_of[ce.u], ctx.local_of[ce.v]});
        }
    }
    return win;
}

} // namespace onepl
