#include "onepl/format.h"

#include <string>

#include "doctest.h"
#include "helpers.h"
#include "onepl/errors.h"
#include "onepl/generators.h"

using namespace onepl;
using namespace onepl::testing;

namespace {

bool same_embedding(const OnePlaneEmbedding& a, const OnePlaneEmbedding& b) {
    if (a.n != b.n || a.edges != b.edges || a.rotations != b.rotations) return false;
    if (a.crossings.size() != b.crossings.size()) return false;
    for (size_t i = 0; i < a.crossings.size(); ++i) {
        if (a.crossings[i].edge_a != b.crossings[i].edge_a) return false;
        if (a.crossings[i].edge_b != b.crossings[i].edge_b) return false;
        if (a.crossings[i].cw_endpoints != b.crossings[i].cw_endpoints) return false;
    }
    return true;
}

} // namespace

TEST_CASE("round trip is the identity") {
    for (const auto& e : {make_c4(), make_k4_crossed(), gen_arrow_single(), gen_fig5()}) {
        std::string text = serialize_1pl(e, "fixture");
        auto parsed = parse_1pl_string(text);
        CHECK(same_embedding(e, parsed));
        CHECK(serialize_1pl(parsed) == serialize_1pl(e));
    }
}

TEST_CASE("generator outputs parse back identically") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto e = gen_random_1plane(seed, 25);
        CHECK(same_embedding(e, parse_1pl_string(serialize_1pl(e))));
    }
    auto x = gen_xcross_rings(2, 5);
    CHECK(same_embedding(x, parse_1pl_string(serialize_1pl(x))));
}

TEST_CASE("parse errors carry line numbers") {
    // header count mismatch: promises 2 edges, provides 1
    std::string bad = "1pl 3 2 0\nedge 0 0 1\nrot 0: 0\nrot 1: 0\nrot 2:\n";
    try {
        (void)parse_1pl_string(bad);
        FAIL("expected a parse error");
    } catch (const InvalidInputError& err) {
        CHECK(std::string(err.what()).find("line 3") != std::string::npos);
    }

    try {
        (void)parse_1pl_string("1pl 1 0\n");
        FAIL("expected a parse error");
    } catch (const InvalidInputError& err) {
        CHECK(std::string(err.what()).find("line 1") != std::string::npos);
    }

    try {
        (void)parse_1pl_string("1pl 2 1 0\nedge 0 0 5\nrot 0: 0\nrot 1: 0\n");
        FAIL("expected a parse error");
    } catch (const InvalidInputError& err) {
        CHECK(std::string(err.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    std::string text = "# a comment\n\n1pl 2 1 0\nedge 0 0 1   # trailing\nrot 0: 0\nrot 1: 0\n";
    auto e = parse_1pl_string(text);
    CHECK(e.n == 2);
    CHECK(e.num_edges() == 1);
}

TEST_CASE("pg output lists kinds") {
    auto e = gen_arrow_single();
    auto pg = serialize_pg(radial_planarization(e));
    CHECK(pg.find("pg 8 18") == 0);
    CHECK(pg.find("v 4 D") != std::string::npos);
    CHECK(pg.find("v 5 F") != std::string::npos);
    CHECK(pg.find(" R\n") != std::string::npos);
}

TEST_CASE("generation and the pipeline are deterministic") {
    CHECK(serialize_1pl(gen_random_1plane(7, 30)) == serialize_1pl(gen_random_1plane(7, 30)));
    CHECK(serialize_1pl(gen_full_random(11, 24)) == serialize_1pl(gen_full_random(11, 24)));
}
