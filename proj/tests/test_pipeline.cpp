#include <doctest.h>

#include <random>

#include "mui/classifier.hpp"
#include "mui/graph_enum.hpp"
#include "mui/pipeline.hpp"
#include "support.hpp"

using namespace mui;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("Fig3 is recognised with a representation free of open-closed intervals") {
    auto inst = generate({Family::Fig3});
    auto res = recognize_and_represent(inst.graph);
    CHECK(res.member);
    REQUIRE(res.rep);
    CHECK(realizes(*res.rep, inst.graph).ok);
    CHECK(type_census(*res.rep).open_closed == 0);
    CHECK_FALSE(res.witness);
    CHECK(replay(res.trace) == res.trace.final);
}

TEST_CASE("Fig9 is rejected with a pair of blocking patterns") {
    auto inst = generate({Family::Fig9});
    auto res = recognize_and_represent(inst.graph, {.start = inst.canonical_rep});
    CHECK_FALSE(res.member);
    REQUIRE(res.witness);
    CHECK(res.witness->first.kind == HalfOpen::open_closed);
    CHECK(res.witness->second.kind == HalfOpen::closed_open);
    REQUIRE(res.rep);
    CHECK(realizes(*res.rep, inst.graph).ok);
    auto c = type_census(*res.rep);
    CHECK(c.open_closed > 0);
    CHECK(c.closed_open > 0);
}

TEST_CASE("graphs outside Mixed get a forbidden subgraph") {
    auto g = generate({Family::K14}).graph;
    auto res = recognize_and_represent(g);
    CHECK_FALSE(res.member);
    CHECK_FALSE(res.rep);
    REQUIRE(res.mixed_witness);
    CHECK(res.trace.steps.empty());
}

TEST_CASE("pipeline agrees with the classifier on connected graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            auto res = recognize_and_represent(g);
            CHECK(res.member == contains(classify(g).label, ClassLabel::AlmostMixed));
            if (res.rep) CHECK(realizes(*res.rep, g).ok);
            CHECK(replay(res.trace) == res.trace.final);
        }
}

TEST_CASE("observer sees every step on a valid representation") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        auto rep = mui::testing::random_layout(rng, n, 3, 5, mui::testing::all_types());
        Graph g = mui::testing::intersection_graph(rep);
        auto tw = reduce_twins(g);
        std::size_t calls = 0;
        bool valid = true;
        PipelineOptions opt;
        opt.start = rep;
        opt.observer = [&](const Representation& r, const Step&) {
            ++calls;
            if (!realizes(r, tw.reduced).ok) valid = false;
        };
        auto res = recognize_and_represent(g, opt);
        CHECK(valid);
        CHECK(calls == res.trace.steps.size());
        REQUIRE(res.rep);
        CHECK(realizes(*res.rep, g).ok);
        CHECK(res.member == contains(classify(g).label, ClassLabel::AlmostMixed));
    }
}

TEST_CASE("mirrored inputs give the same verdict") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        auto rep = mui::testing::random_layout(rng, n, 2, 4, mui::testing::all_types());
        Graph g = mui::testing::intersection_graph(rep);
        auto a = recognize_and_represent(g, {.start = rep});
        auto b = recognize_and_represent(g, {.start = mirror(rep)});
        CHECK(a.member == b.member);
    }
}

TEST_CASE("components are laid out left to right") {
    Graph g(4, {{0, 1}, {2, 3}});
    Representation rep({make_interval(q(5), EndType::open_closed), make_interval(q(11, 2), EndType::closed),
                        make_interval(q(-3), EndType::closed), make_interval(q(-5, 2), EndType::closed)});
    auto res = recognize_and_represent(g, {.start = rep});
    CHECK(res.member);
    REQUIRE(res.rep);
    CHECK(realizes(*res.rep, g).ok);
    Rational lo = (*res.rep)[0].left;
    for (const auto& iv : res.rep->intervals) lo = std::min(lo, iv.left);
    CHECK(lo == 0);
}

TEST_CASE("bad start representation") {
    Graph p2(2, {{0, 1}});
    Representation rep({make_interval(q(0), EndType::closed), make_interval(q(2), EndType::closed)});
    CHECK_THROWS_AS(recognize_and_represent(p2, {.start = rep}), std::invalid_argument);
}

TEST_CASE("trace JSON round trip") {
    auto inst = generate({Family::Fig3});
    auto res = recognize_and_represent(inst.graph);
    auto back = trace_from_json(to_json(res.trace));
    CHECK(back.initial == res.trace.initial);
    CHECK(back.final == res.trace.final);
    CHECK(back.steps.size() == res.trace.steps.size());
    CHECK(replay(back) == back.final);
}
