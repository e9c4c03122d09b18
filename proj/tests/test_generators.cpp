#include "onepl/generators.h"

#include <set>

#include "doctest.h"
#include "onepl/errors.h"
#include "onepl/oracle.h"
#include "onepl/simple_graph.h"

using namespace onepl;

TEST_CASE("every generator output validates") {
    CHECK(validate(gen_cylinder(3, 1)).ok());
    CHECK(validate(gen_cylinder(6, 10)).ok());
    CHECK(validate(gen_arrow_single()).ok());
    CHECK(validate(gen_fig5()).ok());
    CHECK(validate(gen_xcross_rings(2, 3)).ok());
    CHECK(validate(gen_xcross_rings(3, 8)).ok());
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        CHECK(validate(gen_full_random(seed, 10 + static_cast<int>(seed))).ok());
        CHECK(validate(gen_random_1plane(seed, 10 + static_cast<int>(seed))).ok());
    }
}

TEST_CASE("arrow singleton shape") {
    auto e = gen_arrow_single();
    CHECK(e.n == 4);
    CHECK(e.num_edges() == 4);
    CHECK(e.num_crossings() == 1);
    CHECK(classify_crossing(e, 0).cls == CrossingClass::Arrow);
}

TEST_CASE("cylinder is plane and 3-connected") {
    auto e = gen_cylinder(6, 10);
    CHECK(e.num_crossings() == 0);
    auto res = brute_kappa(simple_graph_of(e));
    CHECK(res.kappa == 3);
}

TEST_CASE("xcross rings cross everywhere") {
    auto e = gen_xcross_rings(3, 8);
    REQUIRE(validate(e).ok());
    CHECK(e.num_crossings() == 2 * 2 * 8);
    for (int c = 0; c < e.num_crossings(); ++c)
        CHECK(classify_crossing(e, c).cls == CrossingClass::XCross);
}

TEST_CASE("full generator yields only full crossings") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto e = gen_full_random(seed, 16 + static_cast<int>(seed) % 24);
        REQUIRE(validate(e).ok());
        CHECK(e.num_crossings() >= 1);
        for (int c = 0; c < e.num_crossings(); ++c)
            CHECK(classify_crossing(e, c).cls == CrossingClass::Full);
        CHECK_FALSE(has_x_crossing(e));
    }
}

TEST_CASE("mixed generator hits all five non-x classes across seeds") {
    std::set<CrossingClass> seen;
    for (uint64_t seed = 1; seed <= 120; ++seed) {
        auto e = gen_random_1plane(seed, 20);
        for (int c = 0; c < e.num_crossings(); ++c) {
            auto cls = classify_crossing(e, c).cls;
            CHECK(cls != CrossingClass::XCross);
            seen.insert(cls);
        }
    }
    CHECK(seen.size() == 5);
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS((void)gen_cylinder(2, 5), InvalidInputError);
    CHECK_THROWS_AS((void)gen_xcross_rings(1, 8), InvalidInputError);
    CHECK_THROWS_AS((void)gen_full_random(1, 2), InvalidInputError);
}

TEST_CASE("triple-ring graph realizes its documented properties") {
    auto e = gen_fig5();
    REQUIRE(validate(e).ok());
    // all four crossings are arrows with tip on the t-ring
    REQUIRE(e.num_crossings() == 4);
    for (int c = 0; c < 4; ++c) {
        auto info = classify_crossing(e, c);
        CHECK(info.cls == CrossingClass::Arrow);
        CHECK(info.tip >= 8);
    }
    // kite edges already sit in kite position
    CHECK(add_kite_edges(e).num_edges() == e.num_edges());
    // the documented separator is a minimum separating set
    auto g = simple_graph_of(e);
    auto s = fig5_separator();
    CHECK(verify_separator(g, s));
    CHECK(static_cast<int>(s.size()) == brute_kappa(g).kappa);
}
