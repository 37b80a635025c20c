#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mui/families.hpp"
#include "mui/graph.hpp"
#include "mui/interval.hpp"
#include "mui/matcher.hpp"

namespace mui {

struct IntervalCheck {
    bool interval = false;
    // Maximal cliques (sorted vertex lists) in an order where every vertex's
    // cliques are consecutive. Empty when not interval.
    std::vector<std::vector<int>> clique_order;
    // "not_chordal" or "no_consecutive_clique_order" when not interval.
    std::string obstruction;
};

IntervalCheck is_interval(const Graph& g);

// True iff every vertex's cliques form a contiguous run of the order.
bool is_consecutive_clique_order(const Graph& g, const std::vector<std::vector<int>>& order);

std::vector<std::vector<int>> maximal_cliques(const Graph& g);

struct ClassReport {
    ClassLabel label = ClassLabel::NotInterval;
    // For each class the graph is outside of: the forbidden subgraph found in
    // the twin-reduced graph (ids refer to twin_reduction.reduced).
    std::map<ClassLabel, Witness> witnesses;
    std::string interval_obstruction;
    TwinReduction twin_reduction;
};

struct ClassifyOptions {
    // When false the graph is screened as given, which answers membership in
    // the twin-free sense: a graph with twins is then judged as if its
    // representation had to be injective.
    bool reduce_twins = true;
};

ClassReport classify(const Graph& g, const ClassifyOptions& opt = {});

struct MembershipChain {
    bool interval = false;
    bool mixed = false;
    bool almost_mixed = false;
    bool upm = false;
    bool unit = false;
    bool operator==(const MembershipChain&) const = default;
};

MembershipChain membership_chain(const Graph& g);
MembershipChain membership_chain(const ClassReport& r);

bool contains(ClassLabel graph_label, ClassLabel cls);

// Witness embeddings are reported in original vertex ids (via representatives).
Json to_json(const ClassReport& r, const Graph& g);

}  // namespace mui
