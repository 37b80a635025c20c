#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mui/graph.hpp"
#include "mui/interval.hpp"

namespace mui {

// Subset of the four interval types, one bit per EndType.
class TypeSet {
public:
    constexpr TypeSet() = default;
    TypeSet(std::initializer_list<EndType> ts) {
        for (EndType t : ts) insert(t);
    }
    static TypeSet all() { return {EndType::closed, EndType::open, EndType::closed_open, EndType::open_closed}; }
    static TypeSet unit() { return {EndType::closed}; }
    static TypeSet upm() { return {EndType::closed, EndType::open}; }
    static TypeSet almost_mixed() { return {EndType::closed, EndType::open, EndType::closed_open}; }

    void insert(EndType t) { bits_ |= 1u << static_cast<unsigned>(t); }
    bool has(EndType t) const { return bits_ >> static_cast<unsigned>(t) & 1u; }
    bool empty() const { return bits_ == 0; }
    std::vector<EndType> members() const;
    // "{closed,open}" style.
    std::string str() const;
    bool operator==(const TypeSet&) const = default;

private:
    unsigned bits_ = 0;
};

struct SearchLimits {
    // Abort after this many candidate placements; 0 means unlimited.
    std::uint64_t max_nodes = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    bool aborted = false;
};

// Exhaustive search over combinatorial placements. With the first vertex of
// a component at 0, a layout is determined up to equivalence by the integer
// parts of the left ends and the order (with ties) of their fractional parts,
// so the search branches on those instead of on coordinates and is complete
// over the reals. Left ends come out as q + r/m with m the number of distinct
// fractional parts. Vertices are placed in breadth-first order; each placement
// must agree with the graph on every placed vertex and differ from every
// placed interval, so the input must be twin-free.
std::optional<Representation> synthesize(const Graph& g, TypeSet allowed, const SearchLimits& limits = {},
                                         SearchStats* stats = nullptr);

// The same search restricted to left ends k/(2n). Kept as an independent
// oracle for the combinatorial search on small graphs.
std::optional<Representation> synthesize_on_grid(const Graph& g, TypeSet allowed, const SearchLimits& limits = {},
                                                 SearchStats* stats = nullptr);

inline std::optional<Representation> synthesize_mixed(const Graph& g) { return synthesize(g, TypeSet::all()); }

struct RepType {
    // Interval triples (left rank, left closed, right closed) after translating
    // so the smallest left end is 0 and ranking distinct endpoint values, in
    // sorted order; the lexicographically smaller of a layout and its mirror.
    std::vector<std::string> intervals;
    Representation example;
    bool operator<(const RepType& o) const { return intervals < o.intervals; }
    bool operator==(const RepType& o) const { return intervals == o.intervals; }
};

struct EnumerateOptions {
    // Treat the closedness of an end that touches no other endpoint value as
    // unspecified, so layouts differing only there count once.
    bool identify_free_ends = false;
};

// Every injective mixed representation with all endpoints in [0, window] on
// the k/(2n) grid, reduced to combinatorial types. Throws std::invalid_argument
// for graphs with more than 6 vertices.
std::vector<RepType> enumerate_injective_reps(const Graph& g, const Rational& window,
                                              const EnumerateOptions& opt = {});

}  // namespace mui
