#include "mui/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mui {

const char* to_string(ClassLabel c) {
    switch (c) {
        case ClassLabel::NotInterval: return "NotInterval";
        case ClassLabel::IntervalOnly: return "IntervalOnly";
        case ClassLabel::Mixed: return "Mixed";
        case ClassLabel::AlmostMixed: return "AlmostMixed";
        case ClassLabel::UPM: return "UPM";
        case ClassLabel::Unit: return "Unit";
    }
    return "?";
}

namespace {

struct NamedFamily {
    Family f;
    const char* name;
    int params;
};

constexpr NamedFamily kFamilies[] = {
    {Family::K13, "k13", 0},        {Family::K14, "k14", 0},
    {Family::K14star, "k14star", 0}, {Family::K23star, "k23star", 0},
    {Family::K24star, "k24star", 0}, {Family::R, "r", 1},
    {Family::S, "s", 1},            {Family::Sprime, "sprime", 1},
    {Family::T, "t", 2},            {Family::A, "a", 1},
    {Family::B, "b", 1},            {Family::Bprime, "bprime", 1},
    {Family::Bprimeprime, "bprimeprime", 1}, {Family::C, "c", 1},
    {Family::Cprime, "cprime", 1},  {Family::Fig3, "fig3", 0},
    {Family::Fig9, "fig9", 0},
};

const NamedFamily& info(Family f) {
    for (const auto& nf : kFamilies)
        if (nf.f == f) return nf;
    throw std::logic_error("unknown family");
}

// Collects a graph by role label; ids follow the order labels are declared.
class Builder {
public:
    explicit Builder(std::vector<std::string> labels) : labels_(std::move(labels)) {
        for (std::size_t k = 0; k < labels_.size(); ++k) index_[labels_[k]] = static_cast<int>(k);
    }
    int id(const std::string& l) const {
        auto it = index_.find(l);
        if (it == index_.end()) throw std::logic_error("unknown role label " + l);
        return it->second;
    }
    void edge(const std::string& a, const std::string& b) { edges_.emplace_back(id(a), id(b)); }
    // Space-separated two-letter edges such as "ac bc cd".
    void edges(const std::string& pairs) {
        for (std::size_t k = 0; k + 1 < pairs.size(); k += 3)
            edge(std::string(1, pairs[k]), std::string(1, pairs[k + 1]));
    }
    void place(const std::string& l, const Rational& left, EndType t) {
        if (rep_.empty()) rep_.resize(labels_.size());
        rep_[id(l)] = make_interval(left, t);
    }
    Graph graph() const { return Graph(static_cast<int>(labels_.size()), edges_, labels_); }
    std::optional<Representation> rep() const {
        if (rep_.empty()) return std::nullopt;
        Representation r;
        for (const auto& iv : rep_) {
            if (!iv) throw std::logic_error("incomplete canonical representation");
            r.intervals.push_back(*iv);
        }
        return r;
    }

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::optional<UnitInterval>> rep_;
};

std::vector<std::string> letters(const std::string& s) {
    std::vector<std::string> out;
    for (char c : s) out.emplace_back(1, c);
    return out;
}

std::vector<std::string> with_path(std::vector<std::string> base, int len) {
    for (int k = 1; k <= len; ++k) base.push_back("p" + std::to_string(k));
    return base;
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

constexpr EndType CC = EndType::closed;
constexpr EndType OO = EndType::open;
constexpr EndType CO = EndType::closed_open;
constexpr EndType OC = EndType::open_closed;

// a=[0,1], b=(1,2), c=[1,2], d=[2,3), e=[2,3]: the right-hand gadget.
void place_abcde(Builder& b) {
    b.place("a", q(0), CC);
    b.place("b", q(1), OO);
    b.place("c", q(1), CC);
    b.place("d", q(2), CO);
    b.place("e", q(2), CC);
}

// v closed and u open-closed at x, w closed and y open at x+1, z closed at x+2.
void place_uvwyz(Builder& b, const Rational& x, bool with_w = true, bool with_z = true) {
    b.place("u", x, OC);
    b.place("v", x, CC);
    if (with_w) b.place("w", x + 1, CC);
    b.place("y", x + 1, OO);
    if (with_z) b.place("z", x + 2, CC);
}

void gadgets(Builder& b) { b.edges("uv uw vw wy wz ac bc cd ce de"); }

void path(Builder& b, const std::string& from, int len, const std::string& to) {
    std::string prev = from;
    for (int k = 1; k <= len; ++k) {
        std::string p = "p" + std::to_string(k);
        b.edge(prev, p);
        prev = p;
    }
    b.edge(prev, to);
}

std::vector<std::string> numbered(const std::string& prefix, int from, int to) {
    std::vector<std::string> out;
    for (int k = from; k <= to; ++k) out.push_back(prefix + std::to_string(k));
    return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::string bn(int k) { return "b" + std::to_string(k); }
std::string tn(int k) { return "t" + std::to_string(k); }

void bottom_path(Builder& b, int last) {
    for (int k = 0; k < last; ++k) b.edge(bn(k), bn(k + 1));
}

FamilyInstance build(const FamilyId& id) {
    const int i = id.i;
    const int j = id.j;
    switch (id.family) {
        case Family::K13: {
            Builder b(letters("abcd"));
            b.edges("ac bc cd");
            b.place("a", q(0), CC);
            b.place("b", q(1), OO);
            b.place("c", q(1), CC);
            b.place("d", q(2), CC);
            return {id, b.graph(), b.rep()};
        }
        case Family::K14: {
            Builder b(letters("abcde"));
            b.edges("ac bc cd ce");
            return {id, b.graph(), std::nullopt};
        }
        case Family::K14star: {
            Builder b(letters("abcde"));
            b.edges("ac bc cd ce de");
            place_abcde(b);
            return {id, b.graph(), b.rep()};
        }
        case Family::K23star: {
            Builder b({"b1", "b2", "b3", "t1", "t2"});
            b.edge("t1", "t2");
            for (const char* x : {"b1", "b2", "b3"}) {
                b.edge(x, "t1");
                b.edge(x, "t2");
            }
            return {id, b.graph(), std::nullopt};
        }
        case Family::K24star: {
            Builder b({"b0", "b1", "b2", "b3", "t1", "t2"});
            b.edge("b0", "t1");
            b.edge("b1", "t1");
            b.edge("b1", "t2");
            b.edge("b2", "t1");
            b.edge("b2", "t2");
            b.edge("b3", "t2");
            b.edge("t1", "t2");
            return {id, b.graph(), std::nullopt};
        }
        case Family::R: {
            // Bottom path b0..b_{i+2}; t0 hangs on b1, t_k spans b_k b_{k+1}, t_{i+1} hangs on b_{i+1}.
            Builder b(concat(numbered("b", 0, i + 2), numbered("t", 0, i + 1)));
            bottom_path(b, i + 2);
            b.edge(tn(0), bn(1));
            for (int k = 1; k <= i; ++k) {
                b.edge(tn(k), bn(k));
                b.edge(tn(k), bn(k + 1));
            }
            b.edge(tn(i + 1), bn(i + 1));
            return {id, b.graph(), std::nullopt};
        }
        case Family::S:
        case Family::Sprime: {
            // Bottom path b0..b_{i+1}; t_k spans b_{k-1} b_k for k <= i, t_{i+1} hangs on b_i.
            // S adds x adjacent to t1, t2, b1; S' adds x adjacent to t1, b0, b1.
            Builder b(concat(concat(numbered("b", 0, i + 1), numbered("t", 1, i + 1)), {"x"}));
            bottom_path(b, i + 1);
            for (int k = 1; k <= i; ++k) {
                b.edge(tn(k), bn(k - 1));
                b.edge(tn(k), bn(k));
            }
            b.edge(tn(i + 1), bn(i));
            b.edge("x", tn(1));
            b.edge("x", bn(1));
            b.edge("x", id.family == Family::S ? tn(2) : bn(0));
            return {id, b.graph(), std::nullopt};
        }
        case Family::T: {
            // Bottom path b0..b_{i+j+3}. Left tops l0 (hangs on b1) and l_k spanning
            // b_k b_{k+1} for 1 <= k < i; right tops mirror that with j. The two
            // crossing tops P, Q share b_{i+1}, b_{i+2}; P also reaches b_i when
            // i > 0 and Q reaches b_{i+3} when j > 0.
            const int last = i + j + 3;
            std::vector<std::string> tops;
            for (int k = 0; k < i; ++k) tops.push_back("l" + std::to_string(k));
            tops.push_back("p");
            tops.push_back("q");
            for (int k = 0; k < j; ++k) tops.push_back("r" + std::to_string(k));
            Builder b(concat(numbered("b", 0, last), tops));
            bottom_path(b, last);
            if (i > 0) b.edge("l0", bn(1));
            for (int k = 1; k < i; ++k) {
                b.edge("l" + std::to_string(k), bn(k));
                b.edge("l" + std::to_string(k), bn(k + 1));
            }
            for (const char* x : {"p", "q"}) {
                b.edge(x, bn(i + 1));
                b.edge(x, bn(i + 2));
            }
            if (i > 0) b.edge("p", bn(i));
            if (j > 0) b.edge("q", bn(i + 3));
            // r0 hangs on b_{last-1}; r_k spans b_{last-1-k} b_{last-k}.
            if (j > 0) b.edge("r0", bn(last - 1));
            for (int k = 1; k < j; ++k) {
                b.edge("r" + std::to_string(k), bn(last - 1 - k));
                b.edge("r" + std::to_string(k), bn(last - k));
            }
            return {id, b.graph(), std::nullopt};
        }
        case Family::A: {
            Builder b(with_path(letters("abcdeuvwyz"), i));
            gadgets(b);
            path(b, "z", i, "a");
            place_abcde(b);
            Rational x = q(-i - 3);
            place_uvwyz(b, x);
            for (int k = 1; k <= i; ++k) b.place("p" + std::to_string(k), x + 2 + k, CC);
            return {id, b.graph(), b.rep()};
        }
        case Family::B:
        case Family::Bprime:
        case Family::Bprimeprime: {
            Builder b(with_path(letters("abcdeuvwyz"), i));
            gadgets(b);
            path(b, "e", i, "v");
            if (id.family != Family::B) b.edge("d", "p1");
            if (id.family == Family::Bprimeprime) b.edge("p" + std::to_string(i), "u");
            if (id.family != Family::B) return {id, b.graph(), std::nullopt};
            place_abcde(b);
            for (int k = 1; k <= i; ++k) b.place("p" + std::to_string(k), q(2 + k), CC);
            place_uvwyz(b, q(3 + i));
            return {id, b.graph(), b.rep()};
        }
        case Family::C: {
            switch (i) {
                case -2: {
                    // a doubles as z.
                    Builder b(letters("abcdeuvwy"));
                    b.edges("uv uw vw wy wa ac cb cd ce de");
                    place_abcde(b);
                    place_uvwyz(b, q(-2), true, false);
                    return {id, b.graph(), b.rep()};
                }
                case -1: {
                    // a doubles as w, c as z.
                    Builder b(letters("abcdeuvy"));
                    b.edges("uv ua va ay ac cb cd ce de");
                    place_abcde(b);
                    place_uvwyz(b, q(-1), false, false);
                    return {id, b.graph(), b.rep()};
                }
                case 0: {
                    Builder b(letters("abcdeu"));
                    b.edges("au ac uc bc cd ce de");
                    place_abcde(b);
                    b.place("u", q(0), OC);
                    return {id, b.graph(), b.rep()};
                }
                case 1: {
                    Builder b(letters("abcdeuyz"));
                    b.edges("ac bc ce cd uc ub ud ue de dy ey ez");
                    place_abcde(b);
                    b.place("u", q(1), OC);
                    b.place("y", q(2), OO);
                    b.place("z", q(3), CC);
                    return {id, b.graph(), b.rep()};
                }
                default: {
                    // e doubles as v.
                    Builder b(letters("abcdeuwyz"));
                    b.edges("ac bc ce cd ud ue de wy wz uw ew");
                    place_abcde(b);
                    b.place("u", q(2), OC);
                    b.place("w", q(3), CC);
                    b.place("y", q(3), OO);
                    b.place("z", q(4), CC);
                    return {id, b.graph(), b.rep()};
                }
            }
        }
        case Family::Cprime: {
            static const char* kEdges[] = {
                "uv uw vw wy wz wa za zb zc ya ac cb cd ce de",
                "ca cb cd ce cw cy cz bw by bz de dz ez au av aw ay vu vw uw zw wy",
                "ca cb cd ce cu cv cw cy bu bv bw by au av de dw dy dz ew ey ez vu vw uw zw wy",
                "ca cb cd ce cu cv bu bv de du dv dw dy eu ev ew ey vu vw uw zw wy",
                "uv uw vw wy wz ac cb cd ce de ev eu dv du",
            };
            Builder b(letters("abcdeuvwyz"));
            b.edges(kEdges[i + 2]);
            place_abcde(b);
            place_uvwyz(b, q(2 * i + 1, 2));
            return {id, b.graph(), b.rep()};
        }
        case Family::Fig3: {
            Builder b(letters("abcdef"));
            b.edges("ac bc cd ce de ef");
            place_abcde(b);
            b.place("f", q(3), CC);
            return {id, b.graph(), b.rep()};
        }
        case Family::Fig9: {
            Builder b(letters("abcdefgh"));
            b.edges("ab ac bc cd ce de cf ag eh");
            b.place("a", q(0), CC);
            b.place("b", q(0), OC);
            b.place("c", q(1), CC);
            b.place("d", q(2), CO);
            b.place("e", q(2), CC);
            b.place("f", q(1), OO);
            b.place("g", q(-1), CC);
            b.place("h", q(3), CC);
            return {id, b.graph(), b.rep()};
        }
    }
    throw std::logic_error("unhandled family");
}

bool is_fixed(const FamilyId& id) {
    switch (id.family) {
        case Family::K13:
        case Family::K14:
        case Family::K14star:
        case Family::K23star:
        case Family::K24star:
        case Family::C:
        case Family::Cprime:
        case Family::Fig3:
        case Family::Fig9: return true;
        default: return false;
    }
}

}  // namespace

std::string family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(const std::string& name) {
    for (const auto& nf : kFamilies)
        if (name == nf.name) return nf.f;
    return std::nullopt;
}

int param_count(Family f) { return info(f).params; }

std::string FamilyId::display() const {
    static const char* kDisplay[] = {"K13", "K14", "K14star", "K23star", "K24star", "R",  "S",     "Sprime", "T",
                                     "A",   "B",   "Bprime",  "Bprimeprime", "C", "Cprime", "Fig3", "Fig9"};
    std::string s = kDisplay[static_cast<int>(family)];
    int p = param_count(family);
    if (p >= 1) s += "_" + std::to_string(i);
    if (p == 2) s += "," + std::to_string(j);
    return s;
}

void check_params(const FamilyId& id) {
    auto bad = [&](const std::string& why) { throw std::out_of_range(id.display() + ": " + why); };
    const int p = param_count(id.family);
    if (p < 2 && id.j != 0) bad("unexpected second parameter");
    if (p < 1 && id.i != 0) bad("unexpected parameter");
    switch (id.family) {
        case Family::R:
        case Family::A:
        case Family::B:
            if (id.i < 0) bad("requires i >= 0");
            break;
        case Family::S:
        case Family::Sprime:
        case Family::Bprime:
            if (id.i < 1) bad("requires i >= 1");
            break;
        case Family::Bprimeprime:
            if (id.i < 2) bad("requires i >= 2");
            break;
        case Family::T:
            if (id.i < 0 || id.j < 0) bad("requires i, j >= 0");
            break;
        case Family::C:
        case Family::Cprime:
            if (id.i < -2 || id.i > 2) bad("requires k in -2..2");
            break;
        default: break;
    }
}

int vertex_count(const FamilyId& id) {
    check_params(id);
    switch (id.family) {
        case Family::K13: return 4;
        case Family::K14:
        case Family::K14star:
        case Family::K23star: return 5;
        case Family::K24star: return 6;
        case Family::R: return 2 * id.i + 5;
        case Family::S:
        case Family::Sprime: return 2 * id.i + 4;
        case Family::T: return 2 * (id.i + id.j) + 6;
        case Family::A:
        case Family::B:
        case Family::Bprime:
        case Family::Bprimeprime: return 10 + id.i;
        case Family::C: {
            static const int kSizes[] = {9, 8, 6, 8, 9};
            return kSizes[id.i + 2];
        }
        case Family::Cprime: return 10;
        case Family::Fig3: return 6;
        case Family::Fig9: return 8;
    }
    throw std::logic_error("unhandled family");
}

FamilyInstance generate(const FamilyId& id) {
    check_params(id);
    return build(id);
}

std::optional<Representation> canonical_representation(const FamilyId& id) { return generate(id).canonical_rep; }

std::vector<FamilyId> forbidden_ids(ClassLabel c, int max_vertices) {
    std::vector<FamilyId> fixed;
    std::vector<FamilyId> param;
    auto add = [&](FamilyId id) {
        if (vertex_count(id) > max_vertices) return;
        (is_fixed(id) ? fixed : param).push_back(id);
    };
    auto add_series = [&](Family f, int from) {
        for (int i = from; vertex_count({f, i}) <= max_vertices; ++i) add({f, i});
    };
    switch (c) {
        case ClassLabel::Unit: add({Family::K13}); break;
        case ClassLabel::UPM:
            for (Family f : {Family::K14, Family::K14star, Family::K23star, Family::K24star}) add({f});
            break;
        case ClassLabel::Mixed:
            add({Family::K23star});
            add_series(Family::R, 0);
            add_series(Family::S, 1);
            add_series(Family::Sprime, 1);
            for (int i = 0; vertex_count({Family::T, i, i}) <= max_vertices; ++i)
                for (int j = i; vertex_count({Family::T, i, j}) <= max_vertices; ++j) add({Family::T, i, j});
            break;
        case ClassLabel::AlmostMixed:
            add({Family::K23star});
            for (int k = -2; k <= 2; ++k) add({Family::C, k});
            for (int k = -2; k <= 2; ++k) add({Family::Cprime, k});
            add({Family::R, 0});
            add({Family::R, 1});
            add({Family::T, 1, 1});
            for (int j = 0; vertex_count({Family::T, 0, j}) <= max_vertices; ++j) add({Family::T, 0, j});
            add_series(Family::S, 1);
            add_series(Family::Sprime, 1);
            add_series(Family::A, 0);
            add_series(Family::B, 0);
            add_series(Family::Bprime, 1);
            add_series(Family::Bprimeprime, 2);
            break;
        default: throw std::invalid_argument("no forbidden list for this class");
    }
    auto by_size = [](const FamilyId& a, const FamilyId& b) { return vertex_count(a) < vertex_count(b); };
    std::stable_sort(fixed.begin(), fixed.end(), by_size);
    std::stable_sort(param.begin(), param.end(), [&](const FamilyId& a, const FamilyId& b) {
        if (vertex_count(a) != vertex_count(b)) return vertex_count(a) < vertex_count(b);
        if (a.family != b.family) return a.family < b.family;
        return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
    });
    fixed.insert(fixed.end(), param.begin(), param.end());
    return fixed;
}

std::vector<FamilyInstance> enumerate_forbidden(ClassLabel c, int max_vertices) {
    std::vector<FamilyInstance> out;
    for (const auto& id : forbidden_ids(c, max_vertices)) out.push_back(generate(id));
    return out;
}

}  // namespace mui
