#include "onepl/planar_graph.h"

#include <map>

#include "doctest.h"
#include "helpers.h"
#include "onepl/errors.h"
#include "onepl/generators.h"

using namespace onepl;
using namespace onepl::testing;

TEST_CASE("planarize is the identity on plane graphs") {
    auto e = make_c4();
    PlanarGraph p = planarize(e);
    CHECK(p.num_vertices() == 4);
    CHECK(p.num_edges() == 4);
    CHECK(p.num_faces() == 2);
    for (const auto& f : p.faces) CHECK(f.size() == 4);
}

TEST_CASE("planarized K4-with-crossing has the derived counts") {
    PlanarGraph p = planarize(make_k4_crossed());
    CHECK(p.num_vertices() == 5);
    CHECK(p.num_edges() == 8);
    CHECK(p.num_faces() == 5);   // V - E + F = 2
    // dummy degree 4 among plain edges
    VertexId dummy = p.crossing_images[0].dummy;
    CHECK(p.vertices[dummy].kind == VertexKind::Dummy);
    CHECK(p.rotation_of(dummy).size() == 4);
    // 4 kite faces (triangles) + the outer square
    int triangles = 0, squares = 0;
    for (const auto& f : p.faces) {
        if (f.size() == 3) ++triangles;
        if (f.size() == 4) ++squares;
    }
    CHECK(triangles == 4);
    CHECK(squares == 1);
}

TEST_CASE("single arrow crossing: dummy with two kite faces") {
    PlanarGraph p = planarize(gen_arrow_single());
    CHECK(p.num_vertices() == 5);
    CHECK(p.num_edges() == 6);
    CHECK(p.num_faces() == 3);
    VertexId dummy = p.crossing_images[0].dummy;
    int kite_faces = 0;
    for (const auto& f : p.faces) {
        if (f.size() != 3) continue;
        for (int h : f)
            if (p.end_vertex(h) == dummy) {
                ++kite_faces;
                break;
            }
    }
    CHECK(kite_faces == 2);
}

TEST_CASE("face lengths double-count edges") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto e = gen_random_1plane(seed, 24);
        PlanarGraph p = planarize(e);
        size_t total = 0;
        for (const auto& f : p.faces) total += f.size();
        CHECK(total == 2 * static_cast<size_t>(p.num_edges()));
    }
}

TEST_CASE("radialization of a single edge") {
    OnePlaneEmbedding e;
    e.n = 2;
    e.edges = {{0, 1}};
    e.rotations = {{0}, {0}};
    PlanarGraph p = planarize(e);
    CHECK(p.num_faces() == 1);
    PlanarGraph r = radialize(p);
    CHECK(r.num_vertices() == 3);
    int radial = 0;
    for (const auto& ed : r.edges)
        if (ed.kind == EdgeKind::Radial) ++radial;
    CHECK(radial == 2);
}

TEST_CASE("repeated face incidence yields parallel radial edges") {
    // path a-b-c: the single face visits b twice
    PlanarGraph r = radialize(planarize(make_path3()));
    VertexId fv = kNone;
    for (VertexId v = 0; v < r.num_vertices(); ++v)
        if (r.vertices[v].kind == VertexKind::Face) fv = v;
    REQUIRE(fv != kNone);
    int to_b = 0;
    for (const auto& ed : r.edges)
        if (ed.kind == EdgeKind::Radial && (ed.u == 1 || ed.v == 1)) ++to_b;
    CHECK(to_b == 2);
}

TEST_CASE("radial planarization counts and arrow example") {
    // arrow crossing: Lambda has 4 G-vertices + 1 dummy + 3 face vertices
    PlanarGraph lam = radial_planarization(gen_arrow_single());
    int g = 0, d = 0, f = 0;
    for (const auto& v : lam.vertices) {
        if (v.kind == VertexKind::Original) ++g;
        if (v.kind == VertexKind::Dummy) ++d;
        if (v.kind == VertexKind::Face) ++f;
    }
    CHECK(g == 4);
    CHECK(d == 1);
    CHECK(f == 3);
    // radial edge count per face vertex equals that face's boundary length
    PlanarGraph gx = planarize(gen_arrow_single());
    std::map<int, size_t> expect;
    for (int i = 0; i < gx.num_faces(); ++i) expect[i] = gx.faces[i].size();
    for (VertexId v = 0; v < lam.num_vertices(); ++v) {
        if (lam.vertices[v].kind != VertexKind::Face) continue;
        CHECK(lam.rotation_of(v).size() == expect[lam.vertices[v].ref]);
    }
}

TEST_CASE("crossed edge map") {
    auto plane = make_c4();
    CHECK(crossed_edge_map(plane, radial_planarization(plane)).empty());

    auto e = make_k4_crossed();
    auto lam = radial_planarization(e);
    auto cem = crossed_edge_map(e, lam);
    CHECK(cem.size() == 2);
    CHECK(cem[0].dummy == cem[1].dummy);

    for (uint64_t seed = 1; seed <= 8; ++seed) {
        auto r = gen_random_1plane(seed, 30);
        auto lamr = radial_planarization(r);
        CHECK(crossed_edge_map(r, lamr).size() == 2 * r.crossings.size());
        for (const auto& ce : crossed_edge_map(r, lamr))
            CHECK(lamr.vertices[ce.dummy].kind == VertexKind::Dummy);
    }
}

TEST_CASE("lambda size is linear in n on the corpus") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto e = gen_random_1plane(seed, 40);
        auto ek = add_kite_edges(e);
        auto lam = radial_planarization(ek);
        CHECK(lam.num_vertices() <= 10 * e.n);
        CHECK(lam.num_edges() <= 30 * e.n);
    }
}

TEST_CASE("G-paths lift to plain-edge paths through dummies") {
    // every G-edge is present in Lambda either directly or as a two-edge
    // plain path through its crossing dummy
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        auto e = gen_random_1plane(seed, 20);
        auto gx = planarize(e);
        auto lam = radialize(gx);
        for (EdgeId ge = 0; ge < e.num_edges(); ++ge) {
            auto [u, v] = e.edges[ge];
            EdgeId img_u = lam.g_edge_image[ge][0];
            EdgeId img_v = lam.g_edge_image[ge][1];
            CHECK(lam.edges[img_u].kind == EdgeKind::Plain);
            CHECK(lam.edges[img_v].kind == EdgeKind::Plain);
            if (img_u == img_v) {
                CHECK(((lam.edges[img_u].u == u && lam.edges[img_u].v == v) ||
                       (lam.edges[img_u].u == v && lam.edges[img_u].v == u)));
            } else {
                VertexId cu = lam.edge_other(img_u, u);
                VertexId cv = lam.edge_other(img_v, v);
                CHECK(cu == cv);
                CHECK(lam.vertices[cu].kind == VertexKind::Dummy);
            }
        }
    }
}
