#include <doctest.h>

#include "mui/classifier.hpp"
#include "mui/graph_enum.hpp"
#include "mui/grid_search.hpp"
#include "support.hpp"

using namespace mui;

namespace {

bool uses_only(const Representation& rep, TypeSet allowed) {
    for (const auto& iv : rep.intervals)
        if (!allowed.has(iv.type())) return false;
    return true;
}

std::vector<TypeSet> some_subsets() {
    using E = EndType;
    return {TypeSet::all(),          TypeSet::unit(),          TypeSet::upm(),
            TypeSet::almost_mixed(), TypeSet{E::closed_open},  TypeSet{E::open, E::open_closed},
            TypeSet{E::closed, E::closed_open, E::open_closed}};
}

}  // namespace

TEST_CASE("type sets") {
    TypeSet s{EndType::closed, EndType::open_closed};
    CHECK(s.has(EndType::closed));
    CHECK_FALSE(s.has(EndType::open));
    CHECK(s.members() == std::vector<EndType>{EndType::closed, EndType::open_closed});
    CHECK(TypeSet{}.empty());
    CHECK(TypeSet::all().members().size() == 4);
    CHECK(TypeSet::upm().str() == "{closed,open}");
}

TEST_CASE("synthesized representations realize the graph with allowed types") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            auto tw = reduce_twins(g);
            for (TypeSet ts : some_subsets()) {
                auto rep = synthesize(tw.reduced, ts);
                if (!rep) continue;
                CHECK(realizes(*rep, tw.reduced).ok);
                CHECK(uses_only(*rep, ts));
                CHECK(is_injective(*rep));
            }
        }
}

TEST_CASE("order-type search agrees with the grid search") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : connected_graphs(n)) {
            auto h = reduce_twins(g).reduced;
            for (TypeSet ts : some_subsets()) {
                CAPTURE(ts.str());
                CHECK(synthesize(h, ts).has_value() == synthesize_on_grid(h, ts).has_value());
            }
        }
}

TEST_CASE("search results match the classifier") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            auto c = membership_chain(g);
            auto h = reduce_twins(g).reduced;
            CHECK(synthesize(h, TypeSet::unit()).has_value() == c.unit);
            CHECK(synthesize(h, TypeSet::upm()).has_value() == c.upm);
            CHECK(synthesize(h, TypeSet::almost_mixed()).has_value() == c.almost_mixed);
            CHECK(synthesize(h, TypeSet::all()).has_value() == c.mixed);
        }
}

TEST_CASE("disconnected graphs and the empty graph") {
    Graph g(5, {{0, 1}, {2, 3}});
    auto rep = synthesize(g, TypeSet::unit());
    REQUIRE(rep);
    CHECK(realizes(*rep, g).ok);
    auto empty = synthesize(Graph(0, {}), TypeSet::unit());
    REQUIRE(empty);
    CHECK(empty->size() == 0);
}

TEST_CASE("node limit aborts the search") {
    auto g = generate({Family::K23star}).graph;
    SearchStats stats;
    auto rep = synthesize(g, TypeSet::all(), {.max_nodes = 3}, &stats);
    CHECK_FALSE(rep);
    CHECK(stats.aborted);
    SearchStats full;
    CHECK_FALSE(synthesize(g, TypeSet::all(), {}, &full));
    CHECK_FALSE(full.aborted);
    CHECK(full.nodes > 3);
}

TEST_CASE("injective representation types of K14star") {
    auto g = generate({Family::K14star}).graph;
    auto types = enumerate_injective_reps(g, 4);
    REQUIRE(types.size() == 2);
    for (const auto& t : types) {
        CHECK(realizes(t.example, g).ok);
        CHECK(is_injective(t.example));
    }
    std::vector<EndType> leftmost;
    for (const auto& t : types) leftmost.push_back(mui::testing::leftmost_type(t.example));
    std::sort(leftmost.begin(), leftmost.end());
    CHECK(leftmost == std::vector<EndType>{EndType::closed, EndType::open_closed});
}

TEST_CASE("free-end identification") {
    auto k13 = generate({Family::K13}).graph;
    CHECK(enumerate_injective_reps(k13, 4).size() == 3);
    CHECK(enumerate_injective_reps(k13, 4, {.identify_free_ends = true}).size() == 1);
    CHECK(enumerate_injective_reps(Graph(1, {}), 4).size() == 3);
    CHECK(enumerate_injective_reps(generate({Family::K14}).graph, 4).empty());
    CHECK_THROWS_AS(enumerate_injective_reps(generate({Family::Fig9}).graph, 4), std::invalid_argument);
}
