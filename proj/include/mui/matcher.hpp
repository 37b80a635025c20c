#pragma once

#include <optional>
#include <vector>

#include "mui/families.hpp"
#include "mui/graph.hpp"

namespace mui {

// map[x] = host vertex of pattern vertex x.
struct Embedding {
    std::vector<int> map;
    bool operator==(const Embedding&) const = default;
};

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

// Lexicographically smallest induced embedding (comparing map vectors).
std::optional<Embedding> find_induced(const Graph& pattern, const Graph& host);

struct Witness {
    FamilyId family;
    Embedding embedding;
};

// First forbidden graph of the class found in g, in enumerate_forbidden order.
std::optional<Witness> screen(const Graph& g, ClassLabel c);

}  // namespace mui
