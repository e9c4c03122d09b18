#include "onepl/tree_decomposition.h"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

#include "onepl/errors.h"

namespace onepl {

int TreeDecomposition::width() const {
    size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx) - 1;
}

int NiceTreeDecomposition::width() const {
    size_t mx = 0;
    for (const auto& n : nodes) mx = std::max(mx, n.bag.size());
    return static_cast<int>(mx) - 1;
}

// ── Validation ──────────────────────────────────────────────────────

bool validate_decomposition(const TreeDecomposition& t, int num_vertices,
                            const std::vector<WindowGraph::Edge>& edges) {
    const int nb = static_cast<int>(t.bags.size());
    if (nb == 0) return num_vertices == 0 && edges.empty();

    // Tree shape: connected with nb-1 edges.
    int tree_edges = 0;
    for (const auto& a : t.tree) tree_edges += static_cast<int>(a.size());
    if (tree_edges != 2 * (nb - 1)) return false;
    {
        std::vector<bool> seen(nb, false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        int cnt = 1;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (int c : t.tree[b])
                if (!seen[c]) {
                    seen[c] = true;
                    ++cnt;
                    q.push(c);
                }
        }
        if (cnt != nb) return false;
    }

    // Vertex and edge coverage.
    std::vector<std::vector<int>> bags_of(num_vertices);
    for (int b = 0; b < nb; ++b)
        for (int v : t.bags[b]) {
            if (v < 0 || v >= num_vertices) return false;
            bags_of[v].push_back(b);
        }
    for (int v = 0; v < num_vertices; ++v)
        if (bags_of[v].empty()) return false;
    for (const auto& e : edges) {
        bool covered = false;
        const auto& smaller =
            bags_of[e.a].size() <= bags_of[e.b].size() ? bags_of[e.a] : bags_of[e.b];
        int other = bags_of[e.a].size() <= bags_of[e.b].size() ? e.b : e.a;
        for (int b : smaller)
            if (std::binary_search(t.bags[b].begin(), t.bags[b].end(), other)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }

    // Contiguity: the bags containing v induce a connected subtree.
    std::vector<int> mark(nb, -1);
    for (int v = 0; v < num_vertices; ++v) {
        for (int b : bags_of[v]) mark[b] = v;
        std::queue<int> q;
        q.push(bags_of[v][0]);
        mark[bags_of[v][0]] = -2 - v;
        int cnt = 1;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (int c : t.tree[b])
                if (mark[c] == v) {
                    mark[c] = -2 - v;
                    ++cnt;
                    q.push(c);
                }
        }
        if (cnt != static_cast<int>(bags_of[v].size())) return false;
    }
    return true;
}

// ── Min-degree elimination ──────────────────────────────────────────

TreeDecomposition min_degree_decomposition(int num_vertices,
                                           const std::vector<WindowGraph::Edge>& edges) {
    std::vector<std::set<int>> adj(num_vertices);
    for (const auto& e : edges) {
        if (e.a == e.b) continue;
        adj[e.a].insert(e.b);
        adj[e.b].insert(e.a);
    }

    std::vector<int> position(num_vertices, -1);
    std::vector<std::vector<int>> bag_of(num_vertices);
    std::vector<bool> done(num_vertices, false);

    // (degree, vertex) heap with lazy entries.
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> heap;
    for (int v = 0; v < num_vertices; ++v) heap.push({static_cast<int>(adj[v].size()), v});

    for (int step = 0; step < num_vertices; ++step) {
        int v = -1;
        while (!heap.empty()) {
            auto [deg, cand] = heap.top();
            heap.pop();
            if (!done[cand] && deg == static_cast<int>(adj[cand].size())) {
                v = cand;
                break;
            }
        }
        if (v == -1) break;   // only isolated leftovers (handled below)
        done[v] = true;
        position[v] = step;
        bag_of[v].assign(adj[v].begin(), adj[v].end());
        bag_of[v].push_back(v);
        std::sort(bag_of[v].begin(), bag_of[v].end());
        std::vector<int> nbrs(adj[v].begin(), adj[v].end());
        for (int a : nbrs) adj[a].erase(v);
        for (size_t x = 0; x < nbrs.size(); ++x)
            for (size_t y = x + 1; y < nbrs.size(); ++y) {
                if (adj[nbrs[x]].insert(nbrs[y]).second) adj[nbrs[y]].insert(nbrs[x]);
            }
        for (int a : nbrs) heap.push({static_cast<int>(adj[a].size()), a});
    }

    TreeDecomposition td;
    td.bags.assign(num_vertices, {});
    td.tree.assign(num_vertices, {});
    std::vector<int> order_to_vertex(num_vertices);
    for (int v = 0; v < num_vertices; ++v) order_to_vertex[position[v]] = v;

    int prev_root = -1;
    for (int v = 0; v < num_vertices; ++v) {
        td.bags[v] = bag_of[v];
        // Parent: the bag member eliminated first after v; components whose
        // elimination ends (bag == {v}) chain to the previous root so the
        // result is a single tree even for disconnected inputs.
        int best = -1;
        for (int u : bag_of[v])
            if (u != v && (best == -1 || position[u] < position[best])) best = u;
        if (best != -1) {
            td.tree[v].push_back(best);
            td.tree[best].push_back(v);
        } else {
            if (prev_root != -1) {
                td.tree[v].push_back(prev_root);
                td.tree[prev_root].push_back(v);
            }
            prev_root = v;
        }
    }
    return td;
}

// ── Dummy-neighbourhood augmentation ────────────────────────────────

TreeDecomposition augment_decomposition(const TreeDecomposition& t, const WindowPlus& wp) {
    // in-window crossing endpoints per local dummy vertex
    std::vector<const std::array<int, 4>*> eps_of(wp.num_vertices(), nullptr);
    for (const auto& [dummy, eps] : wp.dummy_endpoints) eps_of[dummy] = &eps;

    TreeDecomposition out = t;
    for (auto& bag : out.bags) {
        std::vector<int> add;
        for (int v : bag) {
            if (!eps_of[v]) continue;
            for (int ep : *eps_of[v])
                if (ep != kNone) add.push_back(ep);
        }
        if (add.empty()) continue;
        bag.insert(bag.end(), add.begin(), add.end());
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
    return out;
}

// ── Min-degree + guaranteed fallback ────────────────────────────────

TreeDecomposition tree_decompose(const WindowGraph& win, const LambdaLayers& ctx) {
    // Decompose Lambda_i plus the dummy spokes (a supergraph's decomposition
    // is a decomposition of the window, and it keeps the T^+ augmentation
    // contiguous).
    std::vector<WindowGraph::Edge> host(win.edges.begin(),
                                        win.edges.begin() +
                                            (win.augmented() ? win.plus_begin : win.edges.size()));
    host.insert(host.end(), win.td_extra.begin(), win.td_extra.end());

    const int bound = 3 * (win.w + 3) - 1;
    TreeDecomposition td = min_degree_decomposition(win.num_vertices(), host);
    if (td.width() <= bound) return td;

    TreeDecomposition fallback = radius_decomposition(win, ctx);
    return fallback.width() < td.width() ? fallback : td;
}

// ── Nice form ───────────────────────────────────────────────────────

namespace {

// Appends a chain of Forget/Introduce nodes transforming bag `from` into
// bag `to` on top of node index `below`; returns the top node index.
int morph_chain(NiceTreeDecomposition& nice, int below, std::vector<int> from,
                const std::vector<int>& to) {
    for (int v : from) {
        if (!std::binary_search(to.begin(), to.end(), v)) {
            std::vector<int> bag;
            const auto& prev = nice.nodes[below].bag;
            for (int u : prev)
                if (u != v) bag.push_back(u);
            nice.nodes.push_back({NiceTreeDecomposition::Kind::Forget, v, below, -1, bag});
            below = static_cast<int>(nice.nodes.size()) - 1;
        }
    }
    for (int v : to) {
        const auto& prev = nice.nodes[below].bag;
        if (!std::binary_search(prev.begin(), prev.end(), v)) {
            std::vector<int> bag = prev;
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            nice.nodes.push_back({NiceTreeDecomposition::Kind::Introduce, v, below, -1, bag});
            below = static_cast<int>(nice.nodes.size()) - 1;
        }
    }
    return below;
}

// Builds the nice subtree for decomposition node `b` (entered from parent
// `from`); returns the index of a nice node whose bag equals t.bags[b].
int build_nice(const TreeDecomposition& t, int b, int from, NiceTreeDecomposition& nice) {
    std::vector<int> children;
    for (int c : t.tree[b])
        if (c != from) children.push_back(c);

    if (children.empty()) {
        nice.nodes.push_back({NiceTreeDecomposition::Kind::Leaf, -1, -1, -1, {}});
        return morph_chain(nice, static_cast<int>(nice.nodes.size()) - 1, {}, t.bags[b]);
    }

    std::vector<int> tops;
    for (int c : children) {
        int sub = build_nice(t, c, b, nice);
        tops.push_back(morph_chain(nice, sub, t.bags[c], t.bags[b]));
    }
    int acc = tops[0];
    for (size_t k = 1; k < tops.size(); ++k) {
        nice.nodes.push_back(
            {NiceTreeDecomposition::Kind::Join, -1, acc, tops[k], t.bags[b]});
        acc = static_cast<int>(nice.nodes.size()) - 1;
    }
    return acc;
}

} // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& t) {
    NiceTreeDecomposition nice;
    if (t.bags.empty()) {
        nice.nodes.push_back({NiceTreeDecomposition::Kind::Leaf, -1, -1, -1, {}});
        return nice;
    }
    int top = build_nice(t, 0, -1, nice);
    morph_chain(nice, top, t.bags[0], {});
    return nice;
}

} // namespace onepl
