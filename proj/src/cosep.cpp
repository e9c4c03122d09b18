#include "onepl/cosep.h"

#include <algorithm>
#include <array>
#include <queue>
#include <unordered_set>

#include "onepl/errors.h"

namespace onepl {

namespace {

constexpr int kMaxBag = 40;

std::array<uint64_t, kMaxBag + 1> make_pow3() {
    std::array<uint64_t, kMaxBag + 1> p{};
    p[0] = 1;
    for (int i = 1; i <= kMaxBag; ++i) p[i] = 3 * p[i - 1];
    return p;
}
const std::array<uint64_t, kMaxBag + 1> kPow3 = make_pow3();

inline uint64_t pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}

std::unordered_set<uint64_t> edge_set_of(const WindowPlus& wp) {
    std::unordered_set<uint64_t> s;
    s.reserve(wp.edges.size() * 2);
    for (const auto& e : wp.edges)
        if (e.a != e.b) s.insert(pair_key(e.a, e.b));
    return s;
}

} // namespace

bool is_valid_cosep(const WindowPlus& wp, int k, const std::vector<Label>& labels) {
    if (static_cast<int>(labels.size()) != wp.num_vertices()) return false;
    int x_g = 0;
    bool a_g = false, b_g = false;
    for (int v = 0; v < wp.num_vertices(); ++v) {
        switch (labels[v]) {
            case Label::X:
                if (!wp.x_allowed[v]) return false;
                if (wp.is_g[v]) ++x_g;
                break;
            case Label::A:
                a_g = a_g || wp.is_g[v];
                break;
            case Label::B:
                b_g = b_g || wp.is_g[v];
                break;
        }
    }
    if (x_g != k || !a_g || !b_g) return false;
    for (const auto& e : wp.edges) {
        Label la = labels[e.a], lb = labels[e.b];
        if ((la == Label::A && lb == Label::B) || (la == Label::B && lb == Label::A)) return false;
    }
    return true;
}

std::optional<CoSepAssignment> exhaustive_cosep(const WindowPlus& wp, int k) {
    const int n = wp.num_vertices();
    if (n > 16) throw InvalidInputError("exhaustive_cosep: window exceeds 16 vertices");
    std::vector<Label> labels(n, Label::A);
    uint64_t total = kPow3[n];
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        for (int v = 0; v < n; ++v) {
            labels[v] = static_cast<Label>(c % 3);
            c /= 3;
        }
        if (is_valid_cosep(wp, k, labels)) return CoSepAssignment{labels};
    }
    return std::nullopt;
}

// ── The DP ──────────────────────────────────────────────────────────

namespace {

// Key layout: labelling * (k+2)*4 + count*4 + flags, labelling read in bag
// order with vertex bag[p] at digit p.
struct DpState {
    uint64_t key;
    uint64_t back0, back1;   // child state keys (join uses both)
};

struct DpTable {
    std::vector<DpState> states;   // sorted by key, unique

    void finish() {
        std::sort(states.begin(), states.end(),
                  [](const DpState& a, const DpState& b) { return a.key < b.key; });
        states.erase(std::unique(states.begin(), states.end(),
                                 [](const DpState& a, const DpState& b) { return a.key == b.key; }),
                     states.end());
    }
    const DpState* lookup(uint64_t key) const {
        auto it = std::lower_bound(states.begin(), states.end(), key,
                                   [](const DpState& s, uint64_t k) { return s.key < k; });
        return (it != states.end() && it->key == key) ? &*it : nullptr;
    }
};

struct KeyCodec {
    uint64_t kc;   // count radix = k+2
    uint64_t lab(uint64_t key) const { return key / (4 * kc); }
    int count(uint64_t key) const { return static_cast<int>((key / 4) % kc); }
    int flags(uint64_t key) const { return static_cast<int>(key & 3); }
    uint64_t make(uint64_t lab, int count, int flags) const {
        return (lab * kc + count) * 4 + flags;
    }
};

} // namespace

std::optional<CoSepAssignment> find_cosep(const WindowPlus& wp,
                                          const NiceTreeDecomposition& nice, int k) {
    const auto edge_set = edge_set_of(wp);
    const KeyCodec codec{static_cast<uint64_t>(k) + 2};
    const int num_nodes = static_cast<int>(nice.nodes.size());
    std::vector<DpTable> tables(num_nodes);

    for (int ni = 0; ni < num_nodes; ++ni) {
        const auto& node = nice.nodes[ni];
        DpTable& table = tables[ni];
        switch (node.kind) {
            case NiceTreeDecomposition::Kind::Leaf:
                table.states.push_back({codec.make(0, 0, 0), 0, 0});
                break;

            case NiceTreeDecomposition::Kind::Introduce: {
                const DpTable& child = tables[node.child0];
                const auto& bag = node.bag;
                const int p = static_cast<int>(
                    std::lower_bound(bag.begin(), bag.end(), node.vertex) - bag.begin());
                const bool vg = wp.is_g[node.vertex];
                const bool vx = wp.x_allowed[node.vertex];
                // Positions (in the child bag) of neighbours of v.
                std::vector<int> nbr;
                const auto& cbag = nice.nodes[node.child0].bag;
                for (int q = 0; q < static_cast<int>(cbag.size()); ++q)
                    if (edge_set.count(pair_key(node.vertex, cbag[q]))) nbr.push_back(q);

                table.states.reserve(child.states.size() * 2);
                for (const DpState& cs : child.states) {
                    uint64_t clab = codec.lab(cs.key);
                    int count = codec.count(cs.key);
                    int flags = codec.flags(cs.key);
                    bool any_a = false, any_b = false;
                    for (int q : nbr) {
                        Label l = static_cast<Label>((clab / kPow3[q]) % 3);
                        any_a = any_a || l == Label::A;
                        any_b = any_b || l == Label::B;
                    }
                    uint64_t low = clab % kPow3[p], high = clab / kPow3[p];
                    for (int d = 0; d < 3; ++d) {
                        Label l = static_cast<Label>(d);
                        if (l == Label::X && !vx) continue;
                        if (l == Label::A && any_b) continue;
                        if (l == Label::B && any_a) continue;
                        int nc = count + (l == Label::X && vg ? 1 : 0);
                        if (nc > k) continue;
                        int nf = flags | (vg && l == Label::A ? 1 : 0) |
                                 (vg && l == Label::B ? 2 : 0);
                        uint64_t nlab = high * kPow3[p + 1] + d * kPow3[p] + low;
                        table.states.push_back({codec.make(nlab, nc, nf), cs.key, 0});
                    }
                }
                break;
            }

            case NiceTreeDecomposition::Kind::Forget: {
                const DpTable& child = tables[node.child0];
                const auto& cbag = nice.nodes[node.child0].bag;
                const int p = static_cast<int>(
                    std::lower_bound(cbag.begin(), cbag.end(), node.vertex) - cbag.begin());
                table.states.reserve(child.states.size());
                for (const DpState& cs : child.states) {
                    uint64_t clab = codec.lab(cs.key);
                    uint64_t low = clab % kPow3[p], high = clab / kPow3[p + 1];
                    uint64_t nlab = high * kPow3[p] + low;
                    table.states.push_back(
                        {codec.make(nlab, codec.count(cs.key), codec.flags(cs.key)), cs.key, 0});
                }
                break;
            }

            case NiceTreeDecomposition::Kind::Join: {
                const DpTable& left = tables[node.child0];
                const DpTable& right = tables[node.child1];
                const auto& bag = node.bag;
                // Count X-labelled G-vertices of a bag labelling.
                std::vector<int> g_pos;
                for (int q = 0; q < static_cast<int>(bag.size()); ++q)
                    if (wp.is_g[bag[q]]) g_pos.push_back(q);
                auto bag_count = [&](uint64_t lab) {
                    int c = 0;
                    for (int q : g_pos)
                        if ((lab / kPow3[q]) % 3 == static_cast<int>(Label::X)) ++c;
                    return c;
                };
                size_t li = 0, ri = 0;
                while (li < left.states.size() && ri < right.states.size()) {
                    uint64_t llab = codec.lab(left.states[li].key);
                    uint64_t rlab = codec.lab(right.states[ri].key);
                    if (llab < rlab) {
                        ++li;
                        continue;
                    }
                    if (rlab < llab) {
                        ++ri;
                        continue;
                    }
                    size_t le = li, re = ri;
                    while (le < left.states.size() && codec.lab(left.states[le].key) == llab) ++le;
                    while (re < right.states.size() && codec.lab(right.states[re].key) == llab) ++re;
                    int cb = bag_count(llab);
                    for (size_t a = li; a < le; ++a) {
                        for (size_t b = ri; b < re; ++b) {
                            int nc = codec.count(left.states[a].key) +
                                     codec.count(right.states[b].key) - cb;
                            if (nc > k) continue;
                            int nf = codec.flags(left.states[a].key) |
                                     codec.flags(right.states[b].key);
                            table.states.push_back({codec.make(llab, nc, nf),
                                                    left.states[a].key, right.states[b].key});
                        }
                    }
                    li = le;
                    ri = re;
                }
                break;
            }
        }
        table.finish();
    }

    // Root: empty bag, exact count, both flags.
    const uint64_t accept = codec.make(0, k, 3);
    if (!tables[num_nodes - 1].lookup(accept)) return std::nullopt;

    // Backtrace, reading each introduced vertex's digit out of the key.
    CoSepAssignment out;
    out.labels.assign(wp.num_vertices(), Label::A);
    std::vector<std::pair<int, uint64_t>> stack{{num_nodes - 1, accept}};
    while (!stack.empty()) {
        auto [ni, key] = stack.back();
        stack.pop_back();
        const auto& node = nice.nodes[ni];
        const DpState* st = tables[ni].lookup(key);
        if (!st) throw InternalInvariantError("cosep backtrace lost a state");
        switch (node.kind) {
            case NiceTreeDecomposition::Kind::Leaf:
                break;
            case NiceTreeDecomposition::Kind::Introduce: {
                const auto& bag = node.bag;
                int p = static_cast<int>(
                    std::lower_bound(bag.begin(), bag.end(), node.vertex) - bag.begin());
                out.labels[node.vertex] =
                    static_cast<Label>((codec.lab(key) / kPow3[p]) % 3);
                stack.push_back({node.child0, st->back0});
                break;
            }
            case NiceTreeDecomposition::Kind::Forget:
                stack.push_back({node.child0, st->back0});
                break;
            case NiceTreeDecomposition::Kind::Join:
                stack.push_back({node.child0, st->back0});
                stack.push_back({node.child1, st->back1});
                break;
        }
    }
    return out;
}

// ── Window pre-filter ───────────────────────────────────────────────

bool window_quick_reject(const WindowPlus& wp, int k) {
    if (k > 2) return false;
    const int n = wp.num_vertices();
    auto adj = wp.adjacency();

    std::vector<int> allowed_g;
    std::vector<bool> base_removed(n, false);
    for (int v = 0; v < n; ++v) {
        if (!wp.x_allowed[v]) continue;
        if (wp.is_g[v])
            allowed_g.push_back(v);
        else
            base_removed[v] = true;   // free vertices may always join X
    }
    if (static_cast<int>(allowed_g.size()) < k) return true;

    // Removing X's superset must split off two G-carrying parts; if no
    // candidate G-subset achieves that, no assignment can exist.
    std::vector<int> comp(n);
    auto splits = [&](const std::vector<bool>& removed) {
        std::fill(comp.begin(), comp.end(), -1);
        int g_sides = 0;
        std::queue<int> q;
        for (int s = 0; s < n && g_sides < 2; ++s) {
            if (removed[s] || comp[s] != -1) continue;
            bool has_g = false;
            comp[s] = s;
            q.push(s);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                has_g = has_g || wp.is_g[v];
                for (int u : adj[v])
                    if (!removed[u] && comp[u] == -1) {
                        comp[u] = s;
                        q.push(u);
                    }
            }
            if (has_g) ++g_sides;
        }
        return g_sides >= 2;
    };

    std::vector<bool> removed = base_removed;
    if (k == 1) {
        for (int v : allowed_g) {
            removed[v] = true;
            if (splits(removed)) return false;
            removed[v] = false;
        }
        return true;
    }
    for (size_t x = 0; x < allowed_g.size(); ++x) {
        removed[allowed_g[x]] = true;
        for (size_t y = x + 1; y < allowed_g.size(); ++y) {
            removed[allowed_g[y]] = true;
            if (splits(removed)) return false;
            removed[allowed_g[y]] = false;
        }
        removed[allowed_g[x]] = false;
    }
    return true;
}

} // namespace onepl
