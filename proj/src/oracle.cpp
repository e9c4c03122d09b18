#include "onepl/oracle.h"

#include <algorithm>
#include <queue>

#include "onepl/errors.h"

namespace onepl {

namespace {

// Minimum s-t vertex cut in g, s and t non-adjacent, via unit-capacity
// augmenting paths on the split graph: v -> (v_in, v_out) with capacity 1
// on the inner arc.  Stops early when the cut reaches `cap`.
int min_vertex_cut(const SimpleGraph& g, VertexId s, VertexId t, int cap) {
    const int n = g.n;
    // Node 2v = v_in, 2v+1 = v_out.  Arcs with residual capacities kept in
    // a flat adjacency structure built once per call.
    struct Arc {
        int to;
        int capacity;
        int rev;   // index of the reverse arc in arcs[to]
    };
    std::vector<std::vector<Arc>> arcs(2 * n);
    auto add_arc = [&](int a, int b, int c) {
        arcs[a].push_back({b, c, static_cast<int>(arcs[b].size())});
        arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
    };
    for (VertexId v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, v == s || v == t ? n : 1);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.adj[v]) add_arc(2 * v + 1, 2 * w, n);

    int flow = 0;
    std::vector<int> prev_node(2 * n), prev_arc(2 * n);
    while (flow < cap) {
        std::fill(prev_node.begin(), prev_node.end(), -1);
        std::queue<int> q;
        q.push(2 * s + 1);
        prev_node[2 * s + 1] = 2 * s + 1;
        while (!q.empty() && prev_node[2 * t] == -1) {
            int a = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(arcs[a].size()); ++i) {
                const Arc& arc = arcs[a][i];
                if (arc.capacity > 0 && prev_node[arc.to] == -1) {
                    prev_node[arc.to] = a;
                    prev_arc[arc.to] = i;
                    q.push(arc.to);
                }
            }
        }
        if (prev_node[2 * t] == -1) break;
        for (int a = 2 * t; a != 2 * s + 1; a = prev_node[a]) {
            Arc& fwd = arcs[prev_node[a]][prev_arc[a]];
            fwd.capacity -= 1;
            arcs[a][fwd.rev].capacity += 1;
        }
        ++flow;
    }
    return flow;
}

// Witness cut for a finished flow value: vertices whose inner arc is
// saturated and crosses the reachable frontier.
std::vector<VertexId> cut_witness(const SimpleGraph& g, VertexId s, VertexId t, int cut) {
    // Re-run the flow, then BFS the residual graph.  Small inputs only, so
    // recomputing is fine.
    const int n = g.n;
    struct Arc {
        int to, capacity, rev;
    };
    std::vector<std::vector<Arc>> arcs(2 * n);
    auto add_arc = [&](int a, int b, int c) {
        arcs[a].push_back({b, c, static_cast<int>(arcs[b].size())});
        arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
    };
    for (VertexId v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, v == s || v == t ? n : 1);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.adj[v]) add_arc(2 * v + 1, 2 * w, n);

    std::vector<int> prev_node(2 * n), prev_arc(2 * n);
    for (int it = 0; it < cut; ++it) {
        std::fill(prev_node.begin(), prev_node.end(), -1);
        std::queue<int> q;
        q.push(2 * s + 1);
        prev_node[2 * s + 1] = 2 * s + 1;
        while (!q.empty() && prev_node[2 * t] == -1) {
            int a = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(arcs[a].size()); ++i) {
                const Arc& arc = arcs[a][i];
                if (arc.capacity > 0 && prev_node[arc.to] == -1) {
                    prev_node[arc.to] = a;
                    prev_arc[arc.to] = i;
                    q.push(arc.to);
                }
            }
        }
        for (int a = 2 * t; a != 2 * s + 1; a = prev_node[a]) {
            Arc& fwd = arcs[prev_node[a]][prev_arc[a]];
            fwd.capacity -= 1;
            arcs[a][fwd.rev].capacity += 1;
        }
    }
    std::vector<bool> reach(2 * n, false);
    std::queue<int> q;
    q.push(2 * s + 1);
    reach[2 * s + 1] = true;
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (const Arc& arc : arcs[a])
            if (arc.capacity > 0 && !reach[arc.to]) {
                reach[arc.to] = true;
                q.push(arc.to);
            }
    }
    std::vector<VertexId> witness;
    for (VertexId v = 0; v < n; ++v)
        if (reach[2 * v] && !reach[2 * v + 1]) witness.push_back(v);
    return witness;
}

} // namespace

KappaResult brute_kappa(const SimpleGraph& g) {
    if (!is_connected(g)) throw InvalidInputError("brute_kappa: disconnected input");
    KappaResult res;
    if (g.is_complete()) {
        res.kappa = g.n - 1;
        res.complete = true;
        return res;
    }

    // kappa = min over s in N[v*] (v* of minimum degree) and t non-adjacent
    // to s of the s-t vertex cut: some member of N[v*] avoids any minimum
    // separator since |N[v*]| > delta >= kappa.
    VertexId vstar = 0;
    for (VertexId v = 1; v < g.n; ++v)
        if (g.adj[v].size() < g.adj[vstar].size()) vstar = v;
    std::vector<VertexId> sources = g.adj[vstar];
    sources.push_back(vstar);

    int best = g.n;
    VertexId best_s = kNone, best_t = kNone;
    for (VertexId s : sources) {
        for (VertexId t = 0; t < g.n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            int cut = min_vertex_cut(g, s, t, best);
            if (cut < best) {
                best = cut;
                best_s = s;
                best_t = t;
            }
        }
    }
    res.kappa = best;
    res.separator = cut_witness(g, best_s, best_t, best);
    return res;
}

bool verify_separator(const SimpleGraph& g, const std::vector<VertexId>& s) {
    std::vector<bool> removed(g.n, false);
    for (VertexId v : s) {
        if (v < 0 || v >= g.n) return false;
        removed[v] = true;
    }
    auto [comp, count] = components_without(g, removed);
    (void)comp;
    return count >= 2;
}

std::vector<VertexId> minimalize_separator(const SimpleGraph& g, std::vector<VertexId> s) {
    if (!verify_separator(g, s)) throw InvalidInputError("minimalize_separator: set does not separate");
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size();) {
        std::vector<VertexId> t = s;
        t.erase(t.begin() + i);
        if (verify_separator(g, t)) {
            s = std::move(t);
        } else {
            ++i;
        }
    }
    return s;
}

} // namespace onepl
