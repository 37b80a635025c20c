#include <doctest.h>

#include <set>

#include "mui/graph_enum.hpp"

using namespace mui;

TEST_CASE("connected graph counts match the known sequence") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == expected[n]);
}

TEST_CASE("all graph counts") {
    const int expected[] = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 0; n <= 6; ++n) CHECK(all_graphs(n).size() == expected[n]);
}

TEST_CASE("canonical form is invariant under relabelling") {
    Graph a(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph b(4, {{3, 1}, {1, 0}, {0, 2}});
    CHECK(canonical_form(a) == canonical_form(b));
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(canonical_form(a) == canonical_form(star));
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic") {
    auto gs = connected_graphs(6);
    std::set<std::string> seen;
    for (const auto& g : gs) seen.insert(emit_graph(canonical_form(g), GraphFormat::graph6));
    CHECK(seen.size() == gs.size());
}
