#include "mui/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace mui {

Representation replay(const PipelineTrace& t) {
    Representation rep = t.initial;
    for (const Step& s : t.steps) apply_step(rep, s);
    return rep;
}

Json to_json(const PipelineTrace& t) {
    Json j;
    j["initial"] = to_json(t.initial);
    Json steps = Json::array();
    for (const Step& s : t.steps) steps.push_back(to_json(s));
    j["steps"] = std::move(steps);
    j["final"] = to_json(t.final);
    return j;
}

PipelineTrace trace_from_json(const Json& j) {
    PipelineTrace t;
    t.initial = representation_from_json(j.at("initial"));
    for (const auto& s : j.at("steps")) t.steps.push_back(step_from_json(s));
    t.final = representation_from_json(j.at("final"));
    return t;
}

namespace {

std::vector<int> survivors(const Representation& rep, const std::vector<int>& comp, EndType t) {
    std::vector<int> out;
    for (int v : comp)
        if (rep[v].type() == t) out.push_back(v);
    return out;
}

BlockPattern to_input_ids(BlockPattern p, const TwinReduction& tw) {
    p.center = tw.representative[p.center];
    for (auto& [name, v] : p.roles) v = tw.representative[v];
    return p;
}

}  // namespace

PipelineResult recognize_and_represent(const Graph& g, const PipelineOptions& opt) {
    PipelineResult res;
    res.twins = reduce_twins(g);
    const TwinReduction& tw = res.twins;
    const Graph& h = tw.reduced;

    Representation start;
    if (opt.start) {
        auto ok = realizes(*opt.start, g);
        if (!ok.ok) throw std::invalid_argument("start representation: " + describe(*ok.violation, g));
        for (int r = 0; r < h.n(); ++r) start.intervals.push_back((*opt.start)[tw.representative[r]]);
    } else {
        SearchStats stats;
        auto found = synthesize(h, TypeSet::all(), opt.synthesis_limits, &stats);
        if (stats.aborted) throw std::runtime_error("mixed representation search hit its node limit");
        if (!found) {
            res.member = false;
            res.mixed_witness = screen(h, ClassLabel::Mixed);
            if (res.mixed_witness)
                for (int& v : res.mixed_witness->embedding.map) v = tw.representative[v];
            return res;
        }
        start = std::move(*found);
    }
    res.trace.initial = start;

    ClosingEngine engine(start);
    if (opt.observer) engine.set_observer(opt.observer);
    const auto comps = connected_components(h);
    // Components are processed in batches by interval type, since switching
    // the engine between the two types costs a full reindex.
    std::vector<std::size_t> pending(comps.size());
    for (std::size_t k = 0; k < comps.size(); ++k) pending[k] = k;
    std::vector<std::size_t> to_mirror;
    bool blocked = false;
    while (!pending.empty()) {
        for (std::size_t k : pending) engine.closing_pass(comps[k], HalfOpen::open_closed, Direction::right_to_left);
        for (std::size_t k : pending) engine.closing_pass(comps[k], HalfOpen::closed_open, Direction::left_to_right);
        Representation cur = engine.representation();
        std::vector<std::size_t> both;
        std::vector<std::pair<int, int>> firsts;
        for (std::size_t k : pending) {
            auto oc = survivors(cur, comps[k], EndType::open_closed);
            auto co = survivors(cur, comps[k], EndType::closed_open);
            if (oc.empty() || co.empty()) {
                if (!oc.empty()) to_mirror.push_back(k);
                continue;
            }
            both.push_back(k);
            firsts.emplace_back(oc.front(), co.front());
        }
        // Both types left: confirm with fresh patterns from the current layout.
        std::size_t before = engine.steps().size();
        std::vector<std::optional<BlockPattern>> p(both.size()), q(both.size());
        for (std::size_t i = 0; i < both.size(); ++i) p[i] = engine.try_close(firsts[i].first, HalfOpen::open_closed);
        for (std::size_t i = 0; i < both.size(); ++i)
            if (p[i]) q[i] = engine.try_close(firsts[i].second, HalfOpen::closed_open);
        pending.clear();
        const bool moved = engine.steps().size() != before;
        for (std::size_t i = 0; i < both.size(); ++i) {
            if (p[i] && q[i] && !moved) {
                if (!res.witness) res.witness = std::make_pair(to_input_ids(*p[i], tw), to_input_ids(*q[i], tw));
                blocked = true;
            } else {
                pending.push_back(both[i]);
            }
        }
    }
    std::sort(to_mirror.begin(), to_mirror.end());
    for (std::size_t k : to_mirror) engine.mirror_vertices(comps[k]);

    // Lay components out in their current left-to-right order, the first
    // starting at 0. Leftward moves go first, leftmost first, then rightward
    // moves, rightmost first, so no two components ever overlap in between.
    Representation cur = engine.representation();
    struct Span {
        const std::vector<int>* comp;
        Rational lo, hi;
    };
    std::vector<Span> spans;
    for (const auto& comp : comps) {
        Span s{&comp, cur[comp.front()].left, cur[comp.front()].left};
        for (int v : comp) {
            s.lo = std::min(s.lo, cur[v].left);
            s.hi = std::max(s.hi, cur[v].left);
        }
        spans.push_back(std::move(s));
    }
    std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });
    std::vector<Rational> delta(spans.size());
    Rational cursor = 0;
    for (std::size_t k = 0; k < spans.size(); ++k) {
        delta[k] = cursor - spans[k].lo;
        cursor = spans[k].hi + delta[k] + 2;
    }
    for (std::size_t k = 0; k < spans.size(); ++k)
        if (delta[k] < 0) engine.translate_vertices(*spans[k].comp, delta[k]);
    for (std::size_t k = spans.size(); k-- > 0;)
        if (delta[k] > 0) engine.translate_vertices(*spans[k].comp, delta[k]);

    res.trace.steps = engine.steps();
    res.trace.final = engine.representation();
    Representation full = expand_twins(tw, res.trace.final);
    auto check = realizes(full, g);
    if (!check.ok) throw std::logic_error("pipeline produced an invalid representation: " + describe(*check.violation, g));
    res.member = !blocked && type_census(full).open_closed == 0;
    res.rep = std::move(full);
    return res;
}

}  // namespace mui
