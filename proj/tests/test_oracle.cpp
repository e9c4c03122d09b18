#include "onepl/oracle.h"

#include "onepl/errors.h"

#include <algorithm>

#include "doctest.h"
#include "helpers.h"
#include "onepl/generators.h"

using namespace onepl;
using namespace onepl::testing;

namespace {

SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    OnePlaneEmbedding e;
    e.n = n;
    for (auto [u, v] : edges) e.edges.emplace_back(u, v);
    return simple_graph_of(e);
}

SimpleGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return from_edges(n, edges);
}

SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return from_edges(n, edges);
}

// Second, independent method: try all vertex subsets by increasing size.
int exhaustive_kappa(const SimpleGraph& g) {
    const int n = g.n;
    for (int size = 0; size < n - 1; ++size) {
        std::vector<bool> pick(n, false);
        std::fill(pick.end() - size, pick.end(), true);
        do {
            std::vector<bool> removed(n, false);
            for (int v = 0; v < n; ++v) removed[v] = pick[v];
            auto [comp, count] = components_without(g, removed);
            (void)comp;
            if (count >= 2) return size;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return n - 1;   // complete
}

} // namespace

TEST_CASE("brute kappa on hand cases") {
    CHECK(brute_kappa(cycle_graph(5)).kappa == 2);
    auto k6 = brute_kappa(complete_graph(6));
    CHECK(k6.complete);
    CHECK(k6.kappa == 5);
    // witness separates
    auto c5 = brute_kappa(cycle_graph(5));
    CHECK(c5.separator.size() == 2);
    CHECK(verify_separator(cycle_graph(5), c5.separator));
}

TEST_CASE("verify_separator basics") {
    auto path = from_edges(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(verify_separator(path, {}));
    CHECK(verify_separator(path, {1}));
    CHECK_FALSE(verify_separator(path, {0}));
}

TEST_CASE("minimalize_separator") {
    auto path = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(minimalize_separator(path, {1}) == std::vector<VertexId>{1});
    auto m = minimalize_separator(path, {1, 3});   // 3's removal keeps it separating
    CHECK(m == std::vector<VertexId>{1});
    // star + extra: neighborhood of a leaf plus noise
    auto star = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}});
    auto m2 = minimalize_separator(star, {0, 2});
    CHECK(m2 == std::vector<VertexId>{0});
    CHECK_THROWS_AS((void)minimalize_separator(path, {0}), InvalidInputError);
}

TEST_CASE("minimality post-check on random instances") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto e = gen_random_1plane(seed, 18);
        auto g = simple_graph_of(e);
        auto res = brute_kappa(g);
        if (res.complete) continue;
        auto m = minimalize_separator(g, res.separator);
        CHECK(verify_separator(g, m));
        for (size_t i = 0; i < m.size(); ++i) {
            auto t = m;
            t.erase(t.begin() + i);
            CHECK_FALSE(verify_separator(g, t));
        }
    }
}

TEST_CASE("brute kappa agrees with exhaustive subset removal") {
    int checked = 0;
    for (uint64_t seed = 1; checked < 100; ++seed) {
        auto e = gen_random_1plane(seed, 8 + static_cast<int>(seed % 8));
        auto g = simple_graph_of(e);
        if (g.n > 18) continue;
        ++checked;
        auto res = brute_kappa(g);
        int expect = exhaustive_kappa(g);
        CHECK(res.kappa == expect);
        if (!res.complete) {
            CHECK(static_cast<int>(res.separator.size()) == res.kappa);
            CHECK(verify_separator(g, res.separator));
        }
    }
}

TEST_CASE("fig5 graph is 4-connected") {
    auto e = gen_fig5();
    auto res = brute_kappa(simple_graph_of(e));
    CHECK(res.kappa == 4);
    CHECK_FALSE(res.complete);
}
