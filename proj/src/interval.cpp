#include "mui/interval.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mui {

const char* to_string(EndType t) {
    switch (t) {
        case EndType::closed: return "closed";
        case EndType::open: return "open";
        case EndType::closed_open: return "closed-open";
        case EndType::open_closed: return "open-closed";
    }
    return "?";
}

EndType UnitInterval::type() const {
    if (left_closed) return right_closed ? EndType::closed : EndType::closed_open;
    return right_closed ? EndType::open_closed : EndType::open;
}

UnitInterval make_interval(const Rational& left, EndType t) {
    UnitInterval iv;
    iv.left = left;
    iv.left_closed = t == EndType::closed || t == EndType::closed_open;
    iv.right_closed = t == EndType::closed || t == EndType::open_closed;
    return iv;
}

std::string to_string(const UnitInterval& iv) {
    std::string s;
    s += iv.left_closed ? '[' : '(';
    s += to_string(iv.left) + "," + to_string(iv.right());
    s += iv.right_closed ? ']' : ')';
    return s;
}

std::vector<EndpointEvent> endpoint_events(const Representation& rep) {
    std::vector<EndpointEvent> ev;
    ev.reserve(2 * rep.intervals.size());
    for (int v = 0; v < rep.size(); ++v) {
        ev.push_back({rep[v].left, v, Side::left, rep[v].left_closed});
        ev.push_back({rep[v].right(), v, Side::right, rep[v].right_closed});
    }
    std::sort(ev.begin(), ev.end(), [](const EndpointEvent& a, const EndpointEvent& b) {
        if (a.position != b.position) return a.position < b.position;
        if (a.side != b.side) return a.side == Side::left;
        return a.vertex < b.vertex;
    });
    return ev;
}

bool intersects(const UnitInterval& a, const UnitInterval& b) {
    const UnitInterval& lo = a.left <= b.left ? a : b;
    const UnitInterval& hi = a.left <= b.left ? b : a;
    int c = cmp(hi.left, lo.left + 1);
    if (c < 0) return true;
    if (c == 0) return lo.right_closed && hi.left_closed;
    return false;
}

RealizeResult realizes(const Representation& rep, const Graph& g) {
    if (rep.size() != g.n())
        throw std::invalid_argument("representation covers " + std::to_string(rep.size()) +
                                    " vertices, graph has " + std::to_string(g.n()));
    std::optional<Violation> best;
    auto consider = [&](int u, int v, Violation::Kind k) {
        if (u > v) std::swap(u, v);
        if (!best || std::make_pair(u, v) < std::make_pair(best->u, best->v)) best = Violation{u, v, k};
    };
    for (auto [u, v] : g.edges())
        if (!intersects(rep[u], rep[v])) consider(u, v, Violation::Kind::missing_edge);
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return rep[x].left < rep[y].left; });
    for (std::size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        Rational reach = rep[u].right();
        for (std::size_t j = i + 1; j < order.size() && rep[order[j]].left <= reach; ++j) {
            int v = order[j];
            if (intersects(rep[u], rep[v]) && !g.adjacent(u, v)) consider(u, v, Violation::Kind::extra_edge);
        }
    }
    RealizeResult r;
    r.ok = !best.has_value();
    r.violation = best;
    return r;
}

std::string describe(const Violation& v, const Graph& g) {
    std::string kind = v.kind == Violation::Kind::missing_edge ? "missing edge" : "extra edge";
    return kind + " (" + g.name(v.u) + ", " + g.name(v.v) + ")";
}

Rational epsilon(const Representation& rep) {
    std::vector<Rational> pts;
    pts.reserve(2 * rep.intervals.size());
    for (const auto& iv : rep.intervals) {
        pts.push_back(iv.left);
        pts.push_back(iv.right());
    }
    std::sort(pts.begin(), pts.end());
    Rational eps = 1;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i] == pts[i - 1]) continue;
        Rational d = pts[i] - pts[i - 1];
        if (d < eps) eps = d;
    }
    return eps;
}

bool is_left_free(const Representation& rep, int v) {
    for (int t = 0; t < rep.size(); ++t)
        if (t != v && rep[t].right() == rep[v].left) return false;
    return true;
}

bool is_right_free(const Representation& rep, int v) {
    Rational r = rep[v].right();
    for (int t = 0; t < rep.size(); ++t)
        if (t != v && rep[t].left == r) return false;
    return true;
}

UnitInterval mirror(const UnitInterval& iv) {
    UnitInterval m;
    m.left = -iv.left - 1;
    m.left_closed = iv.right_closed;
    m.right_closed = iv.left_closed;
    return m;
}

Representation mirror(const Representation& rep) {
    Representation out;
    out.intervals.reserve(rep.intervals.size());
    for (const auto& iv : rep.intervals) out.intervals.push_back(mirror(iv));
    return out;
}

Representation translate(const Representation& rep, const Rational& delta) {
    Representation out = rep;
    for (auto& iv : out.intervals) iv.left += delta;
    return out;
}

bool is_injective(const Representation& rep) {
    std::vector<int> order(rep.size());
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int v) { return std::make_tuple(rep[v].left_closed, rep[v].right_closed); };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (rep[a].left != rep[b].left) return rep[a].left < rep[b].left;
        return key(a) < key(b);
    });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (rep[order[i]] == rep[order[i - 1]]) return false;
    return true;
}

std::size_t TypeCensus::count(EndType t) const {
    switch (t) {
        case EndType::closed: return closed;
        case EndType::open: return open;
        case EndType::closed_open: return closed_open;
        case EndType::open_closed: return open_closed;
    }
    return 0;
}

TypeCensus type_census(const Representation& rep) {
    TypeCensus c;
    for (const auto& iv : rep.intervals) {
        switch (iv.type()) {
            case EndType::closed: ++c.closed; break;
            case EndType::open: ++c.open; break;
            case EndType::closed_open: ++c.closed_open; break;
            case EndType::open_closed: ++c.open_closed; break;
        }
    }
    return c;
}

namespace {

Json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0)
            throw std::invalid_argument("bad integer string '" + j.get<std::string>() + "'");
        return z;
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

Json rational_to_json(const Rational& q) {
    Json j;
    j["num"] = integer_to_json(q.get_num());
    j["den"] = integer_to_json(q.get_den());
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational must be {\"num\":..,\"den\":..}");
    mpz_class num = integer_from_json(j.at("num"));
    mpz_class den = integer_from_json(j.at("den"));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Json to_json(const UnitInterval& iv) {
    Json j;
    j["left"] = rational_to_json(iv.left);
    j["left_closed"] = iv.left_closed;
    j["right_closed"] = iv.right_closed;
    return j;
}

Json to_json(const Representation& rep, const Graph* g) {
    Json vs = Json::array();
    for (int v = 0; v < rep.size(); ++v) {
        Json e;
        e["id"] = v;
        if (g && g->has_labels() && v < g->n()) e["label"] = g->labels()[v];
        e["left"] = rational_to_json(rep[v].left);
        e["left_closed"] = rep[v].left_closed;
        e["right_closed"] = rep[v].right_closed;
        vs.push_back(std::move(e));
    }
    Json j;
    j["vertices"] = std::move(vs);
    return j;
}

Representation representation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
        throw std::invalid_argument("representation must be {\"vertices\":[...]}");
    const auto& vs = j.at("vertices");
    std::vector<std::optional<UnitInterval>> slots(vs.size());
    for (const auto& e : vs) {
        if (!e.is_object() || !e.contains("id") || !e.at("id").is_number_integer())
            throw std::invalid_argument("vertex entry without integer id");
        long long id = e.at("id").get<long long>();
        if (id < 0 || id >= static_cast<long long>(vs.size()))
            throw std::invalid_argument("vertex id " + std::to_string(id) + " out of range");
        if (slots[id]) throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
        if (!e.contains("left") || !e.contains("left_closed") || !e.contains("right_closed") ||
            !e.at("left_closed").is_boolean() || !e.at("right_closed").is_boolean())
            throw std::invalid_argument("vertex " + std::to_string(id) + " lacks left/left_closed/right_closed");
        UnitInterval iv;
        iv.left = rational_from_json(e.at("left"));
        iv.left_closed = e.at("left_closed").get<bool>();
        iv.right_closed = e.at("right_closed").get<bool>();
        slots[id] = iv;
    }
    Representation rep;
    for (auto& s : slots) rep.intervals.push_back(*s);
    return rep;
}

Representation expand_twins(const TwinReduction& red, const Representation& rep) {
    if (rep.size() != red.reduced.n())
        throw std::invalid_argument("representation covers " + std::to_string(rep.size()) +
                                    " vertices, reduced graph has " + std::to_string(red.reduced.n()));
    Representation out;
    out.intervals.reserve(red.class_map.size());
    for (int r : red.class_map) out.intervals.push_back(rep[r]);
    return out;
}

}  // namespace mui
