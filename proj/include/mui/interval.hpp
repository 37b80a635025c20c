#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mui/graph.hpp"
#include "mui/rational.hpp"

namespace mui {

// ++, --, +-, -+ in the usual closedness notation.
enum class EndType { closed, open, closed_open, open_closed };

const char* to_string(EndType t);

// Unit interval with exact left end; the right end is always left + 1.
struct UnitInterval {
    Rational left;
    bool left_closed = true;
    bool right_closed = true;

    Rational right() const { return left + 1; }
    EndType type() const;
    bool operator==(const UnitInterval& o) const {
        return left == o.left && left_closed == o.left_closed && right_closed == o.right_closed;
    }
    bool operator!=(const UnitInterval& o) const { return !(*this == o); }
};

UnitInterval make_interval(const Rational& left, EndType t);

// "[0,1]", "(1/2,3/2]" and so on.
std::string to_string(const UnitInterval& iv);

struct Representation {
    std::vector<UnitInterval> intervals;  // indexed by vertex id

    Representation() = default;
    explicit Representation(std::vector<UnitInterval> ivs) : intervals(std::move(ivs)) {}
    int size() const { return static_cast<int>(intervals.size()); }
    const UnitInterval& operator[](int v) const { return intervals[v]; }
    UnitInterval& operator[](int v) { return intervals[v]; }
    bool operator==(const Representation& o) const { return intervals == o.intervals; }
};

enum class Side { left, right };

struct EndpointEvent {
    Rational position;
    int vertex;
    Side side;
    bool closed;
};

// Every interval end, ordered by position, then left ends before right
// ends, then vertex id.
std::vector<EndpointEvent> endpoint_events(const Representation& rep);

bool intersects(const UnitInterval& a, const UnitInterval& b);

struct Violation {
    enum class Kind { missing_edge, extra_edge };
    int u;
    int v;
    Kind kind;
};

struct RealizeResult {
    bool ok = true;
    std::optional<Violation> violation;  // lexicographically first (u < v) offending pair
    explicit operator bool() const { return ok; }
};

// Throws std::invalid_argument when rep does not cover exactly g's vertices.
RealizeResult realizes(const Representation& rep, const Graph& g);

std::string describe(const Violation& v, const Graph& g);

// Smallest nonzero distance between endpoint values, or 1 if there is none.
Rational epsilon(const Representation& rep);

bool is_left_free(const Representation& rep, int v);
bool is_right_free(const Representation& rep, int v);

// Reflection x -> -x.
Representation mirror(const Representation& rep);
UnitInterval mirror(const UnitInterval& iv);

Representation translate(const Representation& rep, const Rational& delta);

bool is_injective(const Representation& rep);

struct TypeCensus {
    std::size_t closed = 0;
    std::size_t open = 0;
    std::size_t closed_open = 0;
    std::size_t open_closed = 0;

    std::size_t count(EndType t) const;
    bool operator==(const TypeCensus&) const = default;
};

TypeCensus type_census(const Representation& rep);

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const UnitInterval& iv);
// Labels come from g when it is given and labelled.
Json to_json(const Representation& rep, const Graph* g = nullptr);
// Throws std::invalid_argument on schema violations, duplicate or missing ids.
Representation representation_from_json(const Json& j);

// Copies each representative's interval to all members of its twin class.
// Throws std::invalid_argument if rep does not cover the reduced graph.
Representation expand_twins(const TwinReduction& red, const Representation& rep);

}  // namespace mui
