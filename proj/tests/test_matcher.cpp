#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mui/matcher.hpp"

using namespace mui;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<Edge> es;
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return Graph(n, es);
}

// Smallest injective map in lexicographic order, by trying them all.
std::optional<Embedding> brute_force(const Graph& p, const Graph& h) {
    std::vector<int> pick(h.n());
    std::iota(pick.begin(), pick.end(), 0);
    std::optional<Embedding> best;
    std::vector<int> idx(p.n(), 0);
    // Odometer over all maps p -> h.
    for (;;) {
        Embedding e{idx};
        if (is_induced_embedding(p, h, e) && (!best || e.map < best->map)) best = e;
        int k = p.n() - 1;
        while (k >= 0 && ++idx[k] == h.n()) idx[k--] = 0;
        if (k < 0) break;
    }
    return best;
}

}  // namespace

TEST_CASE("embedding validation") {
    Graph p3(3, {{0, 1}, {1, 2}});
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(is_induced_embedding(p3, c4, {{0, 1, 2}}));
    CHECK_FALSE(is_induced_embedding(p3, c4, {{0, 1, 3}}));
    CHECK_FALSE(is_induced_embedding(p3, c4, {{0, 0, 1}}));
    CHECK_FALSE(is_induced_embedding(p3, c4, {{0, 1}}));
}

TEST_CASE("induced search is lexicographically first") {
    Graph claw(4, {{0, 1}, {0, 2}, {0, 3}});
    Graph host(6, {{5, 1}, {5, 2}, {5, 4}, {1, 2}, {5, 0}});
    auto e = find_induced(claw, host);
    REQUIRE(e);
    CHECK(e->map == std::vector<int>{5, 0, 1, 4});
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(find_induced(claw, k4));
}

TEST_CASE("induced search agrees with brute force") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        int pn = std::uniform_int_distribution<int>(1, 4)(rng);
        int hn = std::uniform_int_distribution<int>(pn, 7)(rng);
        Graph p = random_graph(rng, pn, 0.5);
        Graph h = random_graph(rng, hn, 0.4);
        auto fast = find_induced(p, h);
        auto slow = brute_force(p, h);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) CHECK(fast->map == slow->map);
    }
}

TEST_CASE("screen finds the claw in a star") {
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto w = screen(star, ClassLabel::Unit);
    REQUIRE(w);
    CHECK(w->family.family == Family::K13);
    auto u = screen(star, ClassLabel::UPM);
    REQUIRE(u);
    CHECK(u->family.family == Family::K14);
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(screen(p4, ClassLabel::Unit));
}
