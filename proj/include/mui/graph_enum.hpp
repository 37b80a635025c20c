#pragma once

#include <vector>

#include "mui/graph.hpp"

namespace mui {

// All graphs on n vertices up to isomorphism, n <= 8. Each graph is returned
// in a canonical labelling, so the output is deterministic.
std::vector<Graph> all_graphs(int n);

std::vector<Graph> connected_graphs(int n);

// Canonical labelling under permutations that keep vertices sorted by
// descending degree; two graphs on <= 8 vertices are isomorphic iff their
// canonical forms are equal.
Graph canonical_form(const Graph& g);

}  // namespace mui
