#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mui/graph.hpp"
#include "mui/interval.hpp"

namespace mui {

// Position in the hierarchy Unit < UPM < AlmostMixed < Mixed < Interval,
// ordered so that a larger value is a smaller class.
enum class ClassLabel { NotInterval, IntervalOnly, Mixed, AlmostMixed, UPM, Unit };

const char* to_string(ClassLabel c);

enum class Family {
    K13,
    K14,
    K14star,
    K23star,
    K24star,
    R,
    S,
    Sprime,
    T,
    A,
    B,
    Bprime,
    Bprimeprime,
    C,
    Cprime,
    Fig3,
    Fig9,
};

// Lowercase command-line names: "k13", "k14star", "sprime", "fig9", ...
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
int param_count(Family f);

struct FamilyId {
    Family family;
    int i = 0;
    int j = 0;

    bool operator==(const FamilyId&) const = default;
    // "A_0", "T_0,2", "Cprime_-1", "K14star".
    std::string display() const;
};

// Throws std::out_of_range when the parameters are outside the family's range.
void check_params(const FamilyId& id);

struct FamilyInstance {
    FamilyId id;
    Graph graph;  // labels carry the role names (a, b, ..., p1, p2, ...)
    std::optional<Representation> canonical_rep;
};

FamilyInstance generate(const FamilyId& id);
int vertex_count(const FamilyId& id);
std::optional<Representation> canonical_representation(const FamilyId& id);

// Forbidden graphs for a class with at most max_vertices vertices: fixed
// graphs first, then parameterised members by ascending vertex count.
// T_{i,j} and T_{j,i} are isomorphic, so only i <= j is listed.
std::vector<FamilyId> forbidden_ids(ClassLabel c, int max_vertices);
std::vector<FamilyInstance> enumerate_forbidden(ClassLabel c, int max_vertices);

}  // namespace mui
