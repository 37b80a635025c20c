#include "mui/closing.hpp"

#include <algorithm>
#include <stdexcept>

namespace mui {

const char* to_string(HalfOpen h) { return h == HalfOpen::open_closed ? "open_closed" : "closed_open"; }

const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::T1: return "T1";
        case StepKind::T2: return "T2";
        case StepKind::T3: return "T3";
        case StepKind::T4: return "T4";
        case StepKind::mirror: return "mirror";
        case StepKind::translate: return "translate";
    }
    return "?";
}

int BlockPattern::role(const std::string& name) const {
    for (const auto& [r, v] : roles)
        if (r == name) return v;
    return -1;
}

void apply_step(Representation& rep, const Step& s) {
    if (s.kind == StepKind::mirror) {
        for (int v : s.shifted) rep[v] = mirror(rep[v]);
    } else {
        for (int v : s.shifted) rep[v].left += s.delta;
    }
    for (const auto& [v, iv] : s.assigned) rep[v] = iv;
}

namespace {

EndType of(HalfOpen h) { return h == HalfOpen::open_closed ? EndType::open_closed : EndType::closed_open; }

}  // namespace

ClosingEngine::ClosingEngine(Representation rep) : view_(std::move(rep.intervals)) {
    for (int v = 0; v < static_cast<int>(view_.size()); ++v) index_insert(v);
}

Representation ClosingEngine::representation() const {
    Representation rep;
    rep.intervals.reserve(view_.size());
    for (const auto& iv : view_) rep.intervals.push_back(to_original(iv));
    return rep;
}

UnitInterval ClosingEngine::to_original(const UnitInterval& iv) const { return sign_ == 1 ? iv : mirror(iv); }

Rational ClosingEngine::epsilon() const {
    if (gaps_.empty()) return 1;
    return std::min(Rational(1), *gaps_.begin());
}

void ClosingEngine::set_view(int sign) {
    if (sign == sign_) return;
    sign_ = sign;
    by_left_.clear();
    residue_.clear();
    values_.clear();
    gaps_.clear();
    for (auto& iv : view_) iv = mirror(iv);
    for (int v = 0; v < static_cast<int>(view_.size()); ++v) index_insert(v);
}

void ClosingEngine::value_insert(const Rational& p) {
    auto [it, fresh] = values_.try_emplace(p, 0);
    ++it->second;
    if (!fresh) return;
    auto next = std::next(it);
    bool has_prev = it != values_.begin();
    bool has_next = next != values_.end();
    if (has_prev && has_next) gaps_.erase(gaps_.find(Rational(next->first - std::prev(it)->first)));
    if (has_prev) gaps_.insert(Rational(p - std::prev(it)->first));
    if (has_next) gaps_.insert(Rational(next->first - p));
}

void ClosingEngine::value_erase(const Rational& p) {
    auto it = values_.find(p);
    if (--it->second > 0) return;
    auto next = std::next(it);
    bool has_prev = it != values_.begin();
    bool has_next = next != values_.end();
    if (has_prev) gaps_.erase(gaps_.find(Rational(p - std::prev(it)->first)));
    if (has_next) gaps_.erase(gaps_.find(Rational(next->first - p)));
    if (has_prev && has_next) gaps_.insert(Rational(next->first - std::prev(it)->first));
    values_.erase(it);
}

void ClosingEngine::index_insert(int v) {
    const auto& iv = view_[v];
    by_left_[iv.left].push_back(v);
    residue_[frac(iv.left)].insert({iv.left, v});
    value_insert(iv.left);
    value_insert(iv.right());
}

void ClosingEngine::index_erase(int v) {
    const auto& iv = view_[v];
    auto bl = by_left_.find(iv.left);
    auto& ids = bl->second;
    ids.erase(std::find(ids.begin(), ids.end(), v));
    if (ids.empty()) by_left_.erase(bl);
    auto rc = residue_.find(frac(iv.left));
    rc->second.erase({iv.left, v});
    if (rc->second.empty()) residue_.erase(rc);
    value_erase(iv.left);
    value_erase(iv.right());
}

void ClosingEngine::move(int v, const UnitInterval& iv) {
    index_erase(v);
    view_[v] = iv;
    index_insert(v);
}

int ClosingEngine::find_at(const Rational& left, EndType t) const {
    auto it = by_left_.find(left);
    if (it == by_left_.end()) return -1;
    int best = -1;
    for (int v : it->second)
        if (view_[v].type() == t && (best < 0 || v < best)) best = v;
    return best;
}

bool ClosingEngine::left_closed_at(const Rational& left) const {
    return find_at(left, EndType::closed) >= 0 || find_at(left, EndType::closed_open) >= 0;
}

bool ClosingEngine::left_open_at(const Rational& left) const {
    return find_at(left, EndType::open) >= 0 || find_at(left, EndType::open_closed) >= 0;
}

std::vector<int> ClosingEngine::residue_members(const Rational& x, bool up_to, const Rational& bound) const {
    std::vector<int> out;
    auto it = residue_.find(frac(x));
    if (it == residue_.end()) return out;
    const auto& members = it->second;
    if (up_to) {
        for (auto m = members.begin(); m != members.end() && m->first <= bound; ++m) out.push_back(m->second);
    } else {
        for (auto m = members.lower_bound({bound, -1}); m != members.end(); ++m) out.push_back(m->second);
    }
    return out;
}

std::optional<BlockPattern> ClosingEngine::pattern_at(int u) const {
    const Rational x = view_[u].left;
    int v = find_at(x, EndType::closed);
    int w = find_at(x + 1, EndType::closed);
    int y = find_at(x + 1, EndType::open);
    int z = find_at(x + 2, EndType::closed);
    if (z < 0) z = find_at(x + 2, EndType::closed_open);
    if (v < 0 || w < 0 || y < 0 || z < 0) return std::nullopt;
    BlockPattern p;
    p.center = u;
    if (sign_ == 1) {
        p.kind = HalfOpen::open_closed;
        p.roles = {{"u", u}, {"v", v}, {"w", w}, {"y", y}, {"z", z}};
    } else {
        p.kind = HalfOpen::closed_open;
        p.roles = {{"a", z}, {"b", y}, {"c", w}, {"d", u}, {"e", v}};
    }
    return p;
}

void ClosingEngine::record(StepKind kind, int target, std::vector<int> shifted, const Rational& delta,
                           std::vector<std::pair<int, UnitInterval>> assigned) {
    Step s;
    s.kind = kind;
    s.target = target;
    s.shifted = std::move(shifted);
    s.delta = sign_ == 1 ? delta : Rational(-delta);
    for (auto& [v, iv] : assigned) s.assigned.emplace_back(v, to_original(iv));
    steps_.push_back(std::move(s));
    if (observer_) observer_(representation(), steps_.back());
}

std::optional<BlockPattern> ClosingEngine::close_open_closed(int v) {
    for (;;) {
        const Rational x = view_[v].left;
        if (auto p = pattern_at(v)) return p;
        const Rational eps = epsilon();
        auto shift_down = [&](const Rational& delta) {
            auto set = residue_members(x, true, x);
            set.erase(std::remove(set.begin(), set.end(), v), set.end());
            for (int t : set) move(t, {view_[t].left + delta, view_[t].left_closed, view_[t].right_closed});
            return set;
        };
        if (find_at(x, EndType::closed) < 0) {
            Rational delta = -eps / 2;
            auto set = shift_down(delta);
            UnitInterval nv{x, true, true};
            move(v, nv);
            record(StepKind::T1, v, std::move(set), delta, {{v, nv}});
            return std::nullopt;
        }
        if (!left_closed_at(x + 1)) {
            Rational delta = -eps / 2;
            auto set = shift_down(delta);
            UnitInterval nv{x - eps / 4, true, true};
            move(v, nv);
            record(StepKind::T2, v, std::move(set), delta, {{v, nv}});
            return std::nullopt;
        }
        if (!left_open_at(x + 1)) {
            UnitInterval nv{x + eps / 2, true, true};
            move(v, nv);
            record(StepKind::T3, v, {}, 0, {{v, nv}});
            return std::nullopt;
        }
        if (int next = find_at(x + 1, EndType::open_closed); next >= 0) {
            if (auto p = close_open_closed(next)) return p;
            continue;
        }
        int y = find_at(x + 1, EndType::open);
        Rational delta = eps / 2;
        auto set = residue_members(x, false, x + 2);
        for (int t : set) move(t, {view_[t].left + delta, view_[t].left_closed, view_[t].right_closed});
        UnitInterval ny{x + 1 + delta, false, false};
        UnitInterval nv{x + delta, true, true};
        move(y, ny);
        move(v, nv);
        record(StepKind::T4, v, std::move(set), delta, {{y, ny}, {v, nv}});
        return std::nullopt;
    }
}

std::optional<BlockPattern> ClosingEngine::try_close(int v, HalfOpen side) {
    if (v < 0 || v >= static_cast<int>(view_.size()) || to_original(view_[v]).type() != of(side))
        throw std::invalid_argument("try_close: vertex is not " + std::string(to_string(side)));
    set_view(side == HalfOpen::open_closed ? 1 : -1);
    return close_open_closed(v);
}

PassReport ClosingEngine::closing_pass(const std::vector<int>& component, HalfOpen side, Direction dir) {
    std::vector<std::pair<Rational, int>> order;
    for (int v : component) {
        UnitInterval iv = to_original(view_[v]);
        if (iv.type() == of(side)) order.emplace_back(iv.left, v);
    }
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return dir == Direction::right_to_left ? a.first > b.first : a.first < b.first;
        return a.second < b.second;
    });
    set_view(side == HalfOpen::open_closed ? 1 : -1);
    PassReport report;
    for (const auto& [left, v] : order) {
        if (view_[v].type() != EndType::open_closed) continue;
        std::size_t before = steps_.size();
        auto p = close_open_closed(v);
        report.transformations += steps_.size() - before;
        if (p) report.patterns.push_back(std::move(*p));
    }
    return report;
}

void ClosingEngine::mirror_vertices(const std::vector<int>& vs) {
    for (int v : vs) move(v, mirror(view_[v]));
    Step s;
    s.kind = StepKind::mirror;
    s.shifted = vs;
    steps_.push_back(std::move(s));
    if (observer_) observer_(representation(), steps_.back());
}

void ClosingEngine::translate_vertices(const std::vector<int>& vs, const Rational& delta) {
    Rational d = sign_ == 1 ? delta : Rational(-delta);
    for (int v : vs) move(v, {view_[v].left + d, view_[v].left_closed, view_[v].right_closed});
    Step s;
    s.kind = StepKind::translate;
    s.shifted = vs;
    s.delta = delta;
    steps_.push_back(std::move(s));
    if (observer_) observer_(representation(), steps_.back());
}

std::size_t ClosingEngine::count(EndType t) const {
    std::size_t c = 0;
    for (const auto& iv : view_)
        if (to_original(iv).type() == t) ++c;
    return c;
}

namespace {

void require_realizes(const Representation& rep, const Graph& g) {
    auto r = realizes(rep, g);
    if (!r.ok) throw std::invalid_argument("representation does not realize the graph: " + describe(*r.violation, g));
}

}  // namespace

CloseOutcome try_close(const Representation& rep, const Graph& g, int v, HalfOpen side, Observer obs) {
    require_realizes(rep, g);
    ClosingEngine engine(rep);
    engine.set_observer(std::move(obs));
    CloseOutcome out;
    out.pattern = engine.try_close(v, side);
    out.rep = engine.representation();
    out.steps = engine.steps();
    return out;
}

PassOutcome closing_pass(const Representation& rep, const Graph& g, const std::vector<int>& component, HalfOpen side,
                         Direction dir, Observer obs) {
    require_realizes(rep, g);
    ClosingEngine engine(rep);
    engine.set_observer(std::move(obs));
    PassOutcome out;
    out.report = engine.closing_pass(component, side, dir);
    out.rep = engine.representation();
    out.steps = engine.steps();
    return out;
}

Json to_json(const BlockPattern& p, const Graph* g) {
    Json j;
    j["kind"] = to_string(p.kind);
    j["center"] = p.center;
    Json roles = Json::array();
    for (const auto& [name, v] : p.roles) {
        Json r;
        r["role"] = name;
        r["id"] = v;
        if (g && g->has_labels()) r["label"] = g->labels()[v];
        roles.push_back(std::move(r));
    }
    j["roles"] = std::move(roles);
    return j;
}

Json to_json(const Step& s) {
    Json j;
    j["kind"] = to_string(s.kind);
    if (s.target >= 0) j["target"] = s.target;
    j["shifted"] = s.shifted;
    j["delta"] = rational_to_json(s.delta);
    Json as = Json::array();
    for (const auto& [v, iv] : s.assigned) {
        Json a = to_json(iv);
        a["id"] = v;
        as.push_back(std::move(a));
    }
    j["assigned"] = std::move(as);
    return j;
}

Step step_from_json(const Json& j) {
    Step s;
    const std::string kind = j.at("kind").get<std::string>();
    bool known = false;
    for (StepKind k : {StepKind::T1, StepKind::T2, StepKind::T3, StepKind::T4, StepKind::mirror, StepKind::translate})
        if (kind == to_string(k)) {
            s.kind = k;
            known = true;
        }
    if (!known) throw std::invalid_argument("unknown step kind: " + kind);
    s.target = j.value("target", -1);
    s.shifted = j.at("shifted").get<std::vector<int>>();
    s.delta = rational_from_json(j.at("delta"));
    for (const auto& a : j.at("assigned")) {
        UnitInterval iv{rational_from_json(a.at("left")), a.at("left_closed").get<bool>(),
                        a.at("right_closed").get<bool>()};
        s.assigned.emplace_back(a.at("id").get<int>(), iv);
    }
    return s;
}

}  // namespace mui
