#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mui/graph.hpp"
#include "mui/interval.hpp"

namespace mui {

enum class HalfOpen { open_closed, closed_open };

const char* to_string(HalfOpen h);

// Certificate that a half-open interval cannot be closed. For open_closed the
// roles are u (the center), v, w, y, z with, for x = l(u): v = [x,x+1],
// w = [x+1,x+2], y = (x+1,x+2) and z starting closed at x+2. For closed_open
// the roles are the reflection a, b, c, d, e with d the center.
struct BlockPattern {
    HalfOpen kind = HalfOpen::open_closed;
    int center = -1;
    std::vector<std::pair<std::string, int>> roles;  // in role-name order

    int role(const std::string& name) const;
    bool operator==(const BlockPattern&) const = default;
};

enum class StepKind { T1, T2, T3, T4, mirror, translate };

const char* to_string(StepKind k);

// One rewrite. Shifted vertices move by delta; assigned vertices then get
// the listed intervals; mirror reflects the listed vertices through 0.
struct Step {
    StepKind kind = StepKind::T1;
    int target = -1;
    std::vector<int> shifted;
    Rational delta;
    std::vector<std::pair<int, UnitInterval>> assigned;
};

void apply_step(Representation& rep, const Step& s);

using Observer = std::function<void(const Representation&, const Step&)>;

enum class Direction { right_to_left, left_to_right };

struct PassReport {
    std::vector<BlockPattern> patterns;  // one per interval left half-open
    std::size_t transformations = 0;
};

// Incremental state for the closing transformations: indexes by left end,
// by residue class modulo 1, and by endpoint value (for epsilon). Works in a
// view that is either the representation itself or its mirror image, so that
// closed-open intervals are handled by the open-closed logic.
class ClosingEngine {
public:
    explicit ClosingEngine(Representation rep);

    Representation representation() const;
    const std::vector<Step>& steps() const { return steps_; }
    void set_observer(Observer obs) { observer_ = std::move(obs); }

    // Current smallest nonzero distance between endpoint values.
    Rational epsilon() const;

    // Closes v's half-open interval or returns the blocking pattern. Throws
    // std::invalid_argument if v is not of the named type.
    std::optional<BlockPattern> try_close(int v, HalfOpen side);

    // Visits the component's intervals of the given type in the given order
    // (ties by id), fixed at the start of the pass.
    PassReport closing_pass(const std::vector<int>& component, HalfOpen side, Direction dir);

    void mirror_vertices(const std::vector<int>& vs);
    void translate_vertices(const std::vector<int>& vs, const Rational& delta);

    std::size_t count(EndType t) const;

private:
    void set_view(int sign);
    void index_insert(int v);
    void index_erase(int v);
    void value_insert(const Rational& p);
    void value_erase(const Rational& p);
    void move(int v, const UnitInterval& iv);

    int find_at(const Rational& left, EndType t) const;
    bool left_closed_at(const Rational& left) const;
    bool left_open_at(const Rational& left) const;

    std::optional<BlockPattern> close_open_closed(int v);
    std::optional<BlockPattern> pattern_at(int u) const;
    std::vector<int> residue_members(const Rational& x, bool up_to, const Rational& bound) const;
    void record(StepKind kind, int target, std::vector<int> shifted, const Rational& delta,
                std::vector<std::pair<int, UnitInterval>> assigned);
    UnitInterval to_original(const UnitInterval& iv) const;

    std::vector<UnitInterval> view_;
    int sign_ = 1;
    std::map<Rational, std::vector<int>> by_left_;
    std::map<Rational, std::set<std::pair<Rational, int>>> residue_;
    std::map<Rational, int> values_;
    std::multiset<Rational> gaps_;
    std::vector<Step> steps_;
    Observer observer_;
};

struct CloseOutcome {
    Representation rep;
    std::optional<BlockPattern> pattern;  // set when blocked
    std::vector<Step> steps;
};

// Throws std::invalid_argument if rep does not realize g or v has another type.
CloseOutcome try_close(const Representation& rep, const Graph& g, int v, HalfOpen side, Observer obs = {});

struct PassOutcome {
    Representation rep;
    PassReport report;
    std::vector<Step> steps;
};

PassOutcome closing_pass(const Representation& rep, const Graph& g, const std::vector<int>& component, HalfOpen side,
                         Direction dir, Observer obs = {});

Json to_json(const BlockPattern& p, const Graph* g = nullptr);
Json to_json(const Step& s);
Step step_from_json(const Json& j);

}  // namespace mui
