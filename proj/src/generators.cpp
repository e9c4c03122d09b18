#include "onepl/generators.h"

#include <algorithm>
#include <random>

#include "onepl/errors.h"

namespace onepl {

namespace {

int find_pos(const std::vector<EdgeId>& rot, EdgeId id) {
    return static_cast<int>(std::find(rot.begin(), rot.end(), id) - rot.begin());
}

} // namespace

// ── Cylinder ────────────────────────────────────────────────────────

OnePlaneEmbedding gen_cylinder(int circumference, int length) {
    if (circumference < 3 || length < 1)
        throw InvalidInputError("gen_cylinder: need circumference >= 3, length >= 1");
    const int c = circumference, L = length;
    OnePlaneEmbedding e;
    e.n = c * L;
    auto vid = [&](int r, int p) { return r * c + ((p % c) + c) % c; };
    // ring edge (r,p)-(r,p+1) has id r*c+p; rung (r,p)-(r+1,p) id L*c + r*c + p
    for (int r = 0; r < L; ++r)
        for (int p = 0; p < c; ++p) e.edges.emplace_back(vid(r, p), vid(r, p + 1));
    for (int r = 0; r + 1 < L; ++r)
        for (int p = 0; p < c; ++p) e.edges.emplace_back(vid(r, p), vid(r + 1, p));
    auto ring = [&](int r, int p) { return r * c + ((p % c) + c) % c; };
    auto rung = [&](int r, int p) { return L * c + r * c + p; };
    e.rotations.assign(e.n, {});
    for (int r = 0; r < L; ++r) {
        for (int p = 0; p < c; ++p) {
            auto& rot = e.rotations[vid(r, p)];
            if (r + 1 < L) rot.push_back(rung(r, p));      // outward
            rot.push_back(ring(r, p));                     // clockwise along ring
            if (r > 0) rot.push_back(rung(r - 1, p));      // inward
            rot.push_back(ring(r, p - 1));                 // counterclockwise
        }
    }
    return e;
}

// ── Single arrow crossing ───────────────────────────────────────────

OnePlaneEmbedding gen_arrow_single() {
    // tip 0 on top, bases 1 (left) and 2 (right), tail 3 below; the tip-tail
    // edge crosses the base-base edge.
    OnePlaneEmbedding e;
    e.n = 4;
    e.edges = {{1, 2}, {0, 3}, {0, 1}, {0, 2}};
    e.rotations = {{3, 1, 2}, {2, 0}, {0, 3}, {1}};
    CrossingSpec cs;
    cs.edge_a = 1;
    cs.edge_b = 0;
    cs.cw_endpoints = {0, 2, 3, 1};
    e.crossings.push_back(cs);
    return e;
}

// ── Triple-ring arrow graph ─────────────────────────────────────────

OnePlaneEmbedding gen_fig5() {
    // Three concentric square rings: inner i_j, outer o_j, tips t_j between
    // them, tips at 45 degrees off.  The tip ring's edges cross the spokes
    // (i_j, o_j); each crossing is an arrow with tip t-vertex.
    //   vertices: i_j = j, o_j = 4+j, t_j = 8+j
    //   edges: iring_j = j (i_j, i_{j+1}); oring_j = 4+j; spoke_j = 8+j;
    //          kite_i_j = 12+j (i_j, t_j); kite_o_j = 16+j (o_j, t_j);
    //          tedge_j = 20+j (t_j, t_{j+1})
    OnePlaneEmbedding e;
    e.n = 12;
    auto m4 = [](int j) { return ((j % 4) + 4) % 4; };
    e.edges.assign(24, {0, 0});
    for (int j = 0; j < 4; ++j) {
        e.edges[j] = {j, m4(j + 1)};                // iring_j
        e.edges[4 + j] = {4 + j, 4 + m4(j + 1)};    // oring_j
        e.edges[8 + j] = {j, 4 + j};                // spoke_j
        e.edges[12 + j] = {j, 8 + j};               // kite_i_j
        e.edges[16 + j] = {4 + j, 8 + j};           // kite_o_j
        e.edges[20 + j] = {8 + j, 8 + m4(j + 1)};   // tedge_j
    }
    e.rotations.assign(12, {});
    for (int j = 0; j < 4; ++j) {
        e.rotations[j] = {m4(j - 1), 8 + j, 12 + j, j};                  // i_j
        e.rotations[4 + j] = {4 + j, 16 + j, 8 + j, 4 + m4(j - 1)};      // o_j
        e.rotations[8 + j] = {12 + j, 20 + m4(j - 1), 16 + j, 20 + j};   // t_j
    }
    for (int j = 0; j < 4; ++j) {
        CrossingSpec cs;
        cs.edge_a = 20 + m4(j - 1);   // (t_{j-1}, t_j)
        cs.edge_b = 8 + j;            // spoke_j
        cs.cw_endpoints = {8 + m4(j - 1), 4 + j, 8 + j, j};
        e.crossings.push_back(cs);
    }
    return e;
}

std::vector<VertexId> fig5_separator() {
    // The neighbourhood of tip t_0: tips t_1, t_3 and the kite partners
    // i_0, o_0.
    return {0, 4, 9, 11};
}

// ── Interleaved x-crossing rings ────────────────────────────────────

OnePlaneEmbedding gen_xcross_rings(int rings, int width) {
    if (rings < 2 || width < 3)
        throw InvalidInputError("gen_xcross_rings: need rings >= 2, width >= 3");
    const int R = rings, W = width;
    OnePlaneEmbedding e;
    // a(j,p) = j*W+p; b(j,p) = R*W + j*W+p; two bridge midpoints at the end.
    const int base_b = R * W;
    const int mid1 = 2 * R * W, mid2 = 2 * R * W + 1;
    e.n = 2 * R * W + 2;
    auto a = [&](int j, int p) { return j * W + ((p % W) + W) % W; };
    auto b = [&](int j, int p) { return base_b + j * W + ((p % W) + W) % W; };

    // edge ids
    std::vector<std::vector<int>> arc_a(R, std::vector<int>(W)), arc_b(R, std::vector<int>(W));
    std::vector<std::vector<int>> spoke_a(R - 1, std::vector<int>(W)),
        spoke_b(R - 1, std::vector<int>(W));
    auto new_edge = [&](VertexId u, VertexId v) {
        e.edges.emplace_back(u, v);
        return static_cast<int>(e.edges.size()) - 1;
    };
    for (int j = 0; j < R; ++j)
        for (int p = 0; p < W; ++p) arc_a[j][p] = new_edge(a(j, p), a(j, p + 1));
    for (int j = 0; j + 1 < R; ++j)
        for (int p = 0; p < W; ++p) spoke_a[j][p] = new_edge(a(j, p), a(j + 1, p));
    for (int j = 0; j < R; ++j)
        for (int p = 0; p < W; ++p) arc_b[j][p] = new_edge(b(j, p), b(j, p + 1));
    for (int j = 0; j + 1 < R; ++j)
        for (int p = 0; p < W; ++p) spoke_b[j][p] = new_edge(b(j, p), b(j + 1, p));
    // bridges a(0,p)-m-b(0,p) at p = 0 and p = W/2
    const int p2 = W / 2;
    int br_a1 = new_edge(a(0, 0), mid1), br_b1 = new_edge(mid1, b(0, 0));
    int br_a2 = new_edge(a(0, p2), mid2), br_b2 = new_edge(mid2, b(0, p2));

    // rotations; angles grow counterclockwise, rotations are clockwise:
    // [theta+, out, theta-, in] at every grid vertex.
    e.rotations.assign(e.n, {});
    for (int j = 0; j < R; ++j) {
        for (int p = 0; p < W; ++p) {
            auto& rot = e.rotations[a(j, p)];
            rot.push_back(arc_a[j][p]);                        // theta+
            if (j == 0 && (p == 0 || p == p2))                 // bridge: between theta+ and out
                rot.push_back(p == 0 ? br_a1 : br_a2);
            if (j + 1 < R) rot.push_back(spoke_a[j][p]);       // out
            rot.push_back(arc_a[j][(p + W - 1) % W]);          // theta-
            if (j > 0) rot.push_back(spoke_a[j - 1][p]);       // in
        }
    }
    for (int j = 0; j < R; ++j) {
        for (int p = 0; p < W; ++p) {
            auto& rot = e.rotations[b(j, p)];
            rot.push_back(arc_b[j][p]);                        // theta+
            if (j + 1 < R) rot.push_back(spoke_b[j][p]);       // out
            rot.push_back(arc_b[j][(p + W - 1) % W]);          // theta-
            if (j == 0 && (p == 0 || p == p2))                 // bridge: between theta- and in
                rot.push_back(p == 0 ? br_b1 : br_b2);
            if (j > 0) rot.push_back(spoke_b[j - 1][p]);       // in
        }
    }
    e.rotations[mid1] = {br_a1, br_b1};
    e.rotations[mid2] = {br_a2, br_b2};

    // crossings: spoke_a(j,q) x arc_b(j,q-1); spoke_b(j,p) x arc_a(j+1,p)
    for (int j = 0; j + 1 < R; ++j) {
        for (int q = 0; q < W; ++q) {
            CrossingSpec cs;
            cs.edge_a = arc_b[j][(q + W - 1) % W];
            cs.edge_b = spoke_a[j][q];
            cs.cw_endpoints = {b(j, q), a(j + 1, q), b(j, q - 1), a(j, q)};
            e.crossings.push_back(cs);
        }
        for (int p = 0; p < W; ++p) {
            CrossingSpec cs;
            cs.edge_a = arc_a[j + 1][p];
            cs.edge_b = spoke_b[j][p];
            cs.cw_endpoints = {a(j + 1, p + 1), b(j + 1, p), a(j + 1, p), b(j, p)};
            e.crossings.push_back(cs);
        }
    }
    return e;
}

// ── Random plane bases and crossing planting ────────────────────────

namespace {

struct Half {
    EdgeId edge;
    VertexId at;   // arrival vertex
};

struct Builder {
    OnePlaneEmbedding e;
    std::mt19937_64 rng;

    explicit Builder(uint64_t seed) : rng(seed) {
        e.n = 3;
        e.edges = {{0, 1}, {1, 2}, {2, 0}};
        e.rotations = {{0, 2}, {1, 0}, {2, 1}};
    }

    int rand_int(int lo, int hi) {   // inclusive
        return static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)) + lo;
    }

    VertexId other(EdgeId id, VertexId v) const { return e.other_endpoint(id, v); }

    // Face walks of the crossing-free part of the drawing.  Only called
    // while e.crossings is empty.
    std::vector<std::vector<Half>> trace() const {
        std::vector<std::vector<Half>> walks;
        const int m = e.num_edges();
        std::vector<std::array<bool, 2>> used(m, {false, false});
        std::vector<std::vector<int>> pos(e.n);
        for (VertexId v = 0; v < e.n; ++v) {
            pos[v].assign(m, -1);
            for (int idx = 0; idx < static_cast<int>(e.rotations[v].size()); ++idx)
                pos[v][e.rotations[v][idx]] = idx;
        }
        for (int id = 0; id < m; ++id) {
            for (int side = 0; side < 2; ++side) {
                if (used[id][side]) continue;
                std::vector<Half> walk;
                EdgeId ce = id;
                VertexId cv = side ? e.edges[id].second : e.edges[id].first;
                while (true) {
                    int s = (e.edges[ce].first == cv) ? 0 : 1;
                    if (used[ce][s]) break;
                    used[ce][s] = true;
                    walk.push_back({ce, cv});
                    const auto& rot = e.rotations[cv];
                    EdgeId ne = rot[(pos[cv][ce] + 1) % rot.size()];
                    cv = other(ne, cv);
                    ce = ne;
                }
                if (!walk.empty()) walks.push_back(std::move(walk));
            }
        }
        return walks;
    }

    void insert_after(VertexId v, EdgeId anchor, EdgeId id) {
        auto& rot = e.rotations[v];
        rot.insert(rot.begin() + find_pos(rot, anchor) + 1, id);
    }

    bool adjacent(VertexId u, VertexId v) const {
        for (auto [a, b] : e.edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    }

    // chord between two corners of one face walk
    void add_chord(const std::vector<Half>& walk, int t1, int t2) {
        VertexId u = walk[t1].at, w = walk[t2].at;
        EdgeId id = e.num_edges();
        e.edges.emplace_back(u, w);
        insert_after(u, walk[t1].edge, id);
        insert_after(w, walk[t2].edge, id);
    }

    // pendant vertex inside the face at one corner
    void add_pendant(const std::vector<Half>& walk, int t) {
        VertexId u = walk[t].at;
        VertexId z = e.n++;
        e.rotations.push_back({});
        EdgeId id = e.num_edges();
        e.edges.emplace_back(u, z);
        insert_after(u, walk[t].edge, id);
        e.rotations[z] = {id};
    }

    // two-vertex path hugging walk edge (t, t+1); creates a quad face
    void add_quad_pocket(const std::vector<Half>& walk, int t) {
        int t2 = (t + 1) % static_cast<int>(walk.size());
        VertexId va = walk[t].at, vb = walk[t2].at;
        VertexId z1 = e.n++, z2 = e.n++;
        e.rotations.push_back({});
        e.rotations.push_back({});
        EdgeId ea = e.num_edges();
        e.edges.emplace_back(va, z1);
        EdgeId em = e.num_edges();
        e.edges.emplace_back(z1, z2);
        EdgeId eb = e.num_edges();
        e.edges.emplace_back(z2, vb);
        insert_after(va, walk[t].edge, ea);
        insert_after(vb, walk[t2].edge, eb);
        e.rotations[z1] = {ea, em};
        e.rotations[z2] = {em, eb};
    }

    // Plants a crossing over four corners of one face (walk positions
    // t[0] < t[1] < t[2] < t[3] with distinct vertices): crossing edges
    // (u,v), (w,x) plus the requested kite chords (mask bit 0: (u,w),
    // 1: (w,v), 2: (v,x), 3: (x,u)).
    void plant_crossing(const std::vector<Half>& walk, const std::array<int, 4>& t, int kite_mask) {
        VertexId u = walk[t[0]].at, w = walk[t[1]].at, v = walk[t[2]].at, x = walk[t[3]].at;
        EdgeId cross_a = e.num_edges();
        e.edges.emplace_back(u, v);
        EdgeId cross_b = e.num_edges();
        e.edges.emplace_back(w, x);
        std::array<EdgeId, 4> kite{kNone, kNone, kNone, kNone};
        const std::array<std::pair<VertexId, VertexId>, 4> kp{
            {{u, w}, {w, v}, {v, x}, {x, u}}};
        for (int i = 0; i < 4; ++i) {
            if (!(kite_mask & (1 << i))) continue;
            kite[i] = e.num_edges();
            e.edges.emplace_back(kp[i].first, kp[i].second);
        }
        // Corner c_t gets its new ends right after the arrival end, ordered
        // toward corners t-1, t-2, t-3 (cyclically).
        // per corner: edges toward the other three corners, or kNone
        const std::array<std::array<EdgeId, 3>, 4> spokes{{
            {kite[3], cross_a, kite[0]},   // at u: toward x, v, w
            {kite[0], cross_b, kite[1]},   // at w: toward u, x, v
            {kite[1], cross_a, kite[2]},   // at v: toward w, u, x
            {kite[2], cross_b, kite[3]},   // at x: toward v, w, u
        }};
        for (int i = 0; i < 4; ++i) {
            VertexId c = walk[t[i]].at;
            EdgeId anchor = walk[t[i]].edge;
            for (EdgeId id : spokes[i]) {
                if (id == kNone) continue;
                insert_after(c, anchor, id);
                anchor = id;
            }
        }
        CrossingSpec cs;
        cs.edge_a = cross_a;
        cs.edge_b = cross_b;
        cs.cw_endpoints = {u, x, v, w};
        e.crossings.push_back(cs);
    }

    void grow_base(int target, bool with_pendants) {
        while (e.n < target) {
            auto walks = trace();
            const auto& walk = walks[rand_int(0, static_cast<int>(walks.size()) - 1)];
            int len = static_cast<int>(walk.size());
            int move = rand_int(0, 9);
            if (with_pendants && move == 0) {
                add_pendant(walk, rand_int(0, len - 1));
            } else if (move <= 4) {
                add_quad_pocket(walk, rand_int(0, len - 1));
            } else if (move <= 7 && len >= 4) {
                int t1 = rand_int(0, len - 1);
                int t2 = (t1 + rand_int(2, len - 2)) % len;
                if (walk[t1].at != walk[t2].at && !adjacent(walk[t1].at, walk[t2].at))
                    add_chord(walk, std::min(t1, t2), std::max(t1, t2));
            } else {
                // path of one new vertex between two corners
                int t1 = rand_int(0, len - 1);
                int t2 = (t1 + rand_int(1, len - 1)) % len;
                if (walk[t1].at == walk[t2].at) continue;
                VertexId z = e.n++;
                e.rotations.push_back({});
                EdgeId ea = e.num_edges();
                e.edges.emplace_back(walk[t1].at, z);
                EdgeId eb = e.num_edges();
                e.edges.emplace_back(z, walk[t2].at);
                insert_after(walk[t1].at, walk[t1].edge, ea);
                insert_after(walk[t2].at, walk[t2].edge, eb);
                e.rotations[z] = {ea, eb};
            }
        }
    }

    // all faces that are quads with four distinct vertices
    std::vector<std::vector<Half>> quad_faces() {
        std::vector<std::vector<Half>> out;
        for (auto& walk : trace()) {
            if (walk.size() != 4) continue;
            std::array<VertexId, 4> vs{walk[0].at, walk[1].at, walk[2].at, walk[3].at};
            std::sort(vs.begin(), vs.end());
            if (std::unique(vs.begin(), vs.end()) == vs.end()) out.push_back(std::move(walk));
        }
        return out;
    }
};

} // namespace

OnePlaneEmbedding gen_full_random(uint64_t seed, int size) {
    if (size < 4) throw InvalidInputError("gen_full_random: size >= 4");
    Builder b(seed * 2 + 1);
    b.grow_base(size, false);
    auto quads = b.quad_faces();
    if (quads.empty()) {
        b.add_quad_pocket(b.trace().front(), 0);
        quads = b.quad_faces();
    }
    int want = std::max(1, static_cast<int>(quads.size()) / 2);
    std::shuffle(quads.begin(), quads.end(), b.rng);
    for (int q = 0; q < want && q < static_cast<int>(quads.size()); ++q)
        b.plant_crossing(quads[q], {0, 1, 2, 3}, 0);   // boundary edges are the kites
    return b.e;
}

namespace {

// Adjacency patterns over the four consecutive endpoint pairs that realize
// each crossing class (bit i = pair i adjacent).
const std::vector<std::vector<int>> kClassPatterns{
    {0b1111},                           // full
    {0b0111, 0b1011, 0b1101, 0b1110},   // almost-full
    {0b0101, 0b1010},                   // bowtie
    {0b0011, 0b0110, 0b1100, 0b1001},   // arrow
    {0b0001, 0b0010, 0b0100, 0b1000},   // chair
};

} // namespace

OnePlaneEmbedding gen_random_1plane(uint64_t seed, int size) {
    if (size < 4) throw InvalidInputError("gen_random_1plane: size >= 4");
    Builder b(seed * 2 + 1);
    b.grow_base(size, true);

    // Plant into faces of length >= 4, one crossing per face, steering the
    // kite chords toward a randomly chosen class compatible with the
    // adjacencies the chosen corners already have.
    auto walks = b.trace();
    std::sort(walks.begin(), walks.end(),
              [](const auto& x, const auto& y) { return x.size() > y.size(); });
    int want = 1 + static_cast<int>(walks.size()) / 4;
    int planted = 0;
    for (const auto& walk : walks) {
        if (planted >= want) break;
        int len = static_cast<int>(walk.size());
        if (len < 4) continue;
        int t0 = b.rand_int(0, len - 1);
        std::array<int, 4> t{t0, (t0 + 1) % len, 0, 0};
        if (len == 4) {
            t[2] = (t0 + 2) % len;
            t[3] = (t0 + 3) % len;
        } else {
            int g1 = b.rand_int(2, len - 2);
            int g2 = b.rand_int(g1 + 1, len - 1);
            t[2] = (t0 + g1) % len;
            t[3] = (t0 + g2) % len;
        }
        std::array<VertexId, 4> vs{walk[t[0]].at, walk[t[1]].at, walk[t[2]].at, walk[t[3]].at};
        std::array<VertexId, 4> sorted = vs;
        std::sort(sorted.begin(), sorted.end());
        if (std::unique(sorted.begin(), sorted.end()) != sorted.end()) continue;

        int existing = 0;
        for (int i = 0; i < 4; ++i)
            if (b.adjacent(vs[i], vs[(i + 1) % 4])) existing |= 1 << i;

        // Pick a class whose pattern can still be realized, then add only
        // the missing kite chords.
        const auto& variants = kClassPatterns[b.rng() % kClassPatterns.size()];
        int pattern = -1;
        for (size_t off = 0, tries = b.rng() % variants.size(); off < variants.size(); ++off) {
            int cand = variants[(tries + off) % variants.size()];
            if ((existing & ~cand) == 0) {
                pattern = cand;
                break;
            }
        }
        if (pattern == -1) pattern = existing;   // accept whatever the corners give

        b.plant_crossing(walk, t, pattern & ~existing);
        ++planted;
    }
    return b.e;
}

} // namespace onepl
