#include <doctest.h>

#include <random>

#include "mui/graph.hpp"

using namespace mui;

TEST_CASE("graph6 round trip on known strings") {
    Graph k4 = parse_graph("C~", GraphFormat::graph6);
    CHECK(k4.n() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(emit_graph(k4, GraphFormat::graph6) == "C~");

    Graph p3 = parse_graph("Bg", GraphFormat::graph6);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));

    CHECK(parse_graph("?", GraphFormat::graph6).n() == 0);
    CHECK(parse_graph("C~\n", GraphFormat::graph6).n() == 4);
}

TEST_CASE("graph6 handles the long header") {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < 70; ++i) es.emplace_back(i, i + 1);
    Graph path(70, es);
    std::string s = emit_graph(path, GraphFormat::graph6);
    CHECK(s[0] == '~');
    Graph back = parse_graph(s, GraphFormat::graph6);
    CHECK(back.same_edges(path));
}

TEST_CASE("graph6 rejects malformed input with a position") {
    CHECK_THROWS_AS(parse_graph("C", GraphFormat::graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("C~~", GraphFormat::graph6), ParseError);
    try {
        parse_graph("Cz!", GraphFormat::graph6);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
        CHECK_FALSE(e.line_based);
    }
}

TEST_CASE("random graphs survive a graph6 round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(0, 40)(rng);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) es.emplace_back(u, v);
        Graph g(n, es);
        CHECK(parse_graph(emit_graph(g, GraphFormat::graph6), GraphFormat::graph6).same_edges(g));
    }
}

TEST_CASE("edge lists keep labels and isolated vertices") {
    Graph g = parse_graph("a b\nb c # comment\n\nd\n", GraphFormat::edge_list);
    REQUIRE(g.n() == 4);
    CHECK(g.has_labels());
    CHECK(g.labels() == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(g.degree(3) == 0);
    Graph back = parse_graph(emit_graph(g, GraphFormat::edge_list), GraphFormat::edge_list);
    CHECK(back == g);

    Graph plain = parse_graph("0 1\n1 2\n", GraphFormat::edge_list);
    CHECK_FALSE(plain.has_labels());
    CHECK(plain.n() == 3);
}

TEST_CASE("edge list errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text, GraphFormat::edge_list);
        } catch (const ParseError& e) {
            CHECK(e.line_based);
            return e.position;
        }
        return std::size_t{0};
    };
    CHECK(line_of("a b\na a\n") == 2);
    CHECK(line_of("a b\nb a\n") == 2);
    CHECK(line_of("a b c\n") == 1);
}

TEST_CASE("format sniffing") {
    CHECK(sniff_format("C~") == GraphFormat::graph6);
    CHECK(sniff_format("a b\n") == GraphFormat::edge_list);
    CHECK(sniff_format("# header\n0 1\n") == GraphFormat::edge_list);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {}, {"x"}), std::invalid_argument);
}

TEST_CASE("twin reduction") {
    // Claw with a second center: 0 and 4 have equal closed neighbourhoods.
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
    auto tw = reduce_twins(g);
    CHECK(tw.reduced.n() == 4);
    CHECK(tw.class_map[0] == tw.class_map[4]);
    CHECK(tw.classes[tw.class_map[0]] == std::vector<int>{0, 4});
    CHECK(tw.representative[tw.class_map[4]] == 0);

    Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(reduce_twins(k5).reduced.n() == 1);

    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(reduce_twins(p4).reduced.n() == 4);
}

TEST_CASE("components and induced subgraphs") {
    Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4});
    CHECK(comps[2] == std::vector<int>{5});
    CHECK_FALSE(is_connected(g));

    auto sub = induced_subgraph(g, {2, 0, 1});
    CHECK(sub.to_host == std::vector<int>{0, 1, 2});
    CHECK(sub.graph.edge_count() == 2);
}
