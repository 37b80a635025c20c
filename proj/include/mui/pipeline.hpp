#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mui/closing.hpp"
#include "mui/graph.hpp"
#include "mui/grid_search.hpp"
#include "mui/interval.hpp"
#include "mui/matcher.hpp"

namespace mui {

// Everything below refers to the twin-reduced graph: replaying steps on
// initial gives final, and every intermediate representation realizes it.
struct PipelineTrace {
    Representation initial;
    std::vector<Step> steps;
    Representation final;
};

Representation replay(const PipelineTrace& t);

Json to_json(const PipelineTrace& t);
PipelineTrace trace_from_json(const Json& j);

struct PipelineOptions {
    // Starting mixed representation of the input graph; skips synthesis.
    // Must realize the graph.
    std::optional<Representation> start;
    SearchLimits synthesis_limits{};
    Observer observer{};  // sees the reduced representation after every step
};

struct PipelineResult {
    bool member = false;
    // Realizes the input graph. Free of open-closed intervals when member;
    // otherwise the mixed representation the passes ended with, if any.
    std::optional<Representation> rep;
    // Open-closed and closed-open patterns left in one component; vertex ids
    // are input-graph ids (twin representatives).
    std::optional<std::pair<BlockPattern, BlockPattern>> witness;
    // Set when no mixed representation exists.
    std::optional<Witness> mixed_witness;
    PipelineTrace trace;
    TwinReduction twins;
};

// Throws std::invalid_argument for a start representation that does not
// realize g, std::runtime_error if the synthesis limit is hit.
PipelineResult recognize_and_represent(const Graph& g, const PipelineOptions& opt = {});

}  // namespace mui
