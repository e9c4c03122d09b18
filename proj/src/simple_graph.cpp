#include "onepl/simple_graph.h"

#include <algorithm>
#include <queue>

namespace onepl {

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int SimpleGraph::num_edges() const {
    int total = 0;
    for (const auto& a : adj) total += static_cast<int>(a.size());
    return total / 2;
}

bool SimpleGraph::is_complete() const {
    for (const auto& a : adj)
        if (static_cast<int>(a.size()) != n - 1) return false;
    return true;
}

SimpleGraph simple_graph_of(const OnePlaneEmbedding& e) {
    SimpleGraph g;
    g.n = e.n;
    g.adj.assign(e.n, {});
    for (auto [u, v] : e.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

bool is_connected(const SimpleGraph& g) {
    if (g.n == 0) return false;
    std::vector<bool> removed(g.n, false);
    auto [comp, count] = components_without(g, removed);
    return count == 1;
}

std::pair<std::vector<int>, int> components_without(const SimpleGraph& g,
                                                    const std::vector<bool>& removed) {
    std::vector<int> comp(g.n, -1);
    int count = 0;
    std::queue<VertexId> q;
    for (VertexId s = 0; s < g.n; ++s) {
        if (removed[s] || comp[s] != -1) continue;
        comp[s] = count;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : g.adj[v]) {
                if (!removed[w] && comp[w] == -1) {
                    comp[w] = count;
                    q.push(w);
                }
            }
        }
        ++count;
    }
    return {comp, count};
}

} // namespace onepl
