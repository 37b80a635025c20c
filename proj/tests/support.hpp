#pragma once

#include <random>
#include <set>
#include <tuple>

#include "mui/interval.hpp"

namespace mui::testing {

inline Graph intersection_graph(const Representation& rep) {
    std::vector<Edge> es;
    for (int a = 0; a < rep.size(); ++a)
        for (int b = a + 1; b < rep.size(); ++b)
            if (intersects(rep[a], rep[b])) es.emplace_back(a, b);
    return Graph(rep.size(), es);
}

// n distinct intervals with left ends k/den, k in [0, span * den], and
// closedness drawn from the allowed types.
inline Representation random_layout(std::mt19937& rng, int n, int den, int span, const std::vector<EndType>& types) {
    Representation rep;
    std::set<std::pair<long, EndType>> used;
    std::uniform_int_distribution<long> pos(0, static_cast<long>(span) * den);
    std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
    while (rep.size() < n) {
        long k = pos(rng);
        EndType t = types[pick(rng)];
        if (!used.insert({k, t}).second) continue;
        rep.intervals.push_back(make_interval(make_rational(k, den), t));
    }
    return rep;
}

inline const std::vector<EndType>& all_types() {
    static const std::vector<EndType> ts = {EndType::closed, EndType::open, EndType::closed_open,
                                            EndType::open_closed};
    return ts;
}

// Type of the leftmost interval, read in whichever orientation (the layout or
// its mirror) has a single interval at the smallest left end.
inline EndType leftmost_type(const Representation& rep) {
    auto lowest = [](const Representation& r) {
        std::vector<int> at;
        for (int v = 0; v < r.size(); ++v) {
            if (!at.empty() && r[v].left > r[at[0]].left) continue;
            if (!at.empty() && r[v].left < r[at[0]].left) at.clear();
            at.push_back(v);
        }
        return at;
    };
    auto at = lowest(rep);
    if (at.size() == 1) return rep[at[0]].type();
    Representation m = mirror(rep);
    auto mt = lowest(m);
    return m[mt[0]].type();
}

}  // namespace mui::testing
