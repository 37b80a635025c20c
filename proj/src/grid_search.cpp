#include "mui/grid_search.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace mui {

std::vector<EndType> TypeSet::members() const {
    std::vector<EndType> out;
    for (EndType t : {EndType::closed, EndType::open, EndType::closed_open, EndType::open_closed})
        if (has(t)) out.push_back(t);
    return out;
}

std::string TypeSet::str() const {
    std::string s = "{";
    for (EndType t : members()) {
        if (s.size() > 1) s += ",";
        s += to_string(t);
    }
    return s + "}";
}

namespace {

struct Slot {
    long k = 0;
    bool lc = true;
    bool rc = true;
};

bool meets(const Slot& a, const Slot& b, long unit) {
    const Slot& lo = a.k <= b.k ? a : b;
    const Slot& hi = a.k <= b.k ? b : a;
    if (hi.k < lo.k + unit) return true;
    if (hi.k == lo.k + unit) return lo.rc && hi.lc;
    return false;
}

std::vector<int> bfs_order(const Graph& g) {
    std::vector<int> order;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
    }
    return order;
}

// Enumerates placements on the integer grid where the unit length is
// `unit` steps. The visitor returns false to stop.
class GridSearch {
public:
    using Visitor = std::function<bool(const std::vector<Slot>&)>;

    GridSearch(const Graph& g, TypeSet allowed, long unit, long kmin, long kmax, bool pin_first)
        : g_(g), unit_(unit), kmin_(kmin), kmax_(kmax), pin_first_(pin_first), order_(bfs_order(g)),
          slots_(g.n()), adj_(static_cast<std::size_t>(g.n()) * g.n(), 0) {
        for (EndType t : allowed.members()) {
            auto iv = make_interval(0, t);
            flags_.push_back({iv.left_closed, iv.right_closed});
        }
        for (int v = 0; v < g.n(); ++v)
            for (int w : g.neighbors(v)) adj_[static_cast<std::size_t>(v) * g.n() + w] = 1;
    }

    void run(const Visitor& visit, const SearchLimits& limits, SearchStats& stats) {
        visit_ = &visit;
        limits_ = limits;
        stats_ = &stats;
        stop_ = false;
        if (g_.n() == 0) {
            visit(slots_);
            return;
        }
        dfs(0);
    }

private:
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * g_.n() + v]; }

    void dfs(std::size_t depth) {
        if (stop_) return;
        if (depth == order_.size()) {
            if (!(*visit_)(slots_)) stop_ = true;
            return;
        }
        const int v = order_[depth];
        long lo = kmin_, hi = kmax_;
        bool anchored = false;
        for (std::size_t i = 0; i < depth; ++i) {
            int u = order_[i];
            if (!adjacent(u, v)) continue;
            lo = std::max(lo, slots_[u].k - unit_);
            hi = std::min(hi, slots_[u].k + unit_);
            anchored = true;
        }
        if (!anchored && pin_first_) {
            // New component: place it clear of everything already placed.
            long right = std::numeric_limits<long>::min();
            for (std::size_t i = 0; i < depth; ++i) right = std::max(right, slots_[order_[i]].k);
            lo = hi = depth == 0 ? 0 : right + 2 * unit_;
        }
        for (long k = lo; k <= hi && !stop_; ++k) {
            for (auto [lc, rc] : flags_) {
                if (limits_.max_nodes && stats_->nodes >= limits_.max_nodes) {
                    stats_->aborted = true;
                    stop_ = true;
                    return;
                }
                ++stats_->nodes;
                Slot s{k, lc, rc};
                if (!fits(v, s, depth)) continue;
                slots_[v] = s;
                dfs(depth + 1);
                if (stop_) return;
            }
        }
    }

    bool fits(int v, const Slot& s, std::size_t depth) const {
        for (std::size_t i = 0; i < depth; ++i) {
            int u = order_[i];
            const Slot& t = slots_[u];
            if (t.k == s.k && t.lc == s.lc && t.rc == s.rc) return false;
            if (meets(s, t, unit_) != adjacent(u, v)) return false;
        }
        return true;
    }

    const Graph& g_;
    long unit_;
    long kmin_;
    long kmax_;
    bool pin_first_;
    std::vector<int> order_;
    std::vector<Slot> slots_;
    std::vector<char> adj_;
    std::vector<std::pair<bool, bool>> flags_;
    const Visitor* visit_ = nullptr;
    SearchLimits limits_;
    SearchStats* stats_ = nullptr;
    bool stop_ = false;
};

Representation to_rep(const std::vector<Slot>& slots, long unit) {
    Representation rep;
    for (const Slot& s : slots) rep.intervals.push_back({Rational(s.k, unit), s.lc, s.rc});
    for (auto& iv : rep.intervals) iv.left.canonicalize();
    return rep;
}

std::vector<std::string> type_key(const Representation& rep, bool identify_free_ends) {
    std::vector<Rational> values;
    for (const auto& iv : rep.intervals) {
        values.push_back(iv.left);
        values.push_back(iv.right());
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    auto rank = [&](const Rational& q) { return std::lower_bound(values.begin(), values.end(), q) - values.begin(); };
    std::vector<std::string> out;
    for (int v = 0; v < rep.size(); ++v) {
        const auto& iv = rep[v];
        std::string lc = iv.left_closed ? "[" : "(";
        std::string rc = iv.right_closed ? "]" : ")";
        if (identify_free_ends) {
            if (is_left_free(rep, v)) lc = "{";
            if (is_right_free(rep, v)) rc = "}";
        }
        out.push_back(lc + std::to_string(rank(iv.left)) + "," + std::to_string(rank(iv.right())) + rc);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Placement as (integer part, rank of fractional part). Ranks index the
// sorted distinct fractional parts; rank 0 is the first vertex's part, 0.
struct Cell {
    long q = 0;
    int r = 0;
    bool lc = true;
    bool rc = true;
};

class OrderSearch {
public:
    OrderSearch(const Graph& g, TypeSet allowed, const SearchLimits& limits, SearchStats& stats)
        : g_(g), order_(bfs_order(g)), cells_(g.n()), placed_(g.n(), false), limits_(limits), stats_(stats) {
        for (EndType t : allowed.members()) {
            auto iv = make_interval(0, t);
            flags_.push_back({iv.left_closed, iv.right_closed});
        }
    }

    std::optional<Representation> run() {
        if (g_.n() == 0) return Representation{};
        if (!dfs(0)) return std::nullopt;
        Representation rep;
        for (const Cell& c : cells_) rep.intervals.push_back({Rational(c.q) + Rational(c.r, classes_), c.lc, c.rc});
        for (auto& iv : rep.intervals) iv.left.canonicalize();
        return rep;
    }

private:
    static bool less(long qa, int ra, long qb, int rb) { return qa < qb || (qa == qb && ra < rb); }

    static bool meets(const Cell& a, const Cell& b) {
        bool a_first = !less(b.q, b.r, a.q, a.r);
        const Cell& lo = a_first ? a : b;
        const Cell& hi = a_first ? b : a;
        if (less(hi.q, hi.r, lo.q + 1, lo.r)) return true;
        if (hi.q == lo.q + 1 && hi.r == lo.r) return lo.rc && hi.lc;
        return false;
    }

    bool fits(int v, const Cell& c, std::size_t depth) const {
        for (std::size_t i = 0; i < depth; ++i) {
            int u = order_[i];
            const Cell& t = cells_[u];
            if (t.q == c.q && t.r == c.r && t.lc == c.lc && t.rc == c.rc) return false;
            if (meets(c, t) != g_.adjacent(u, v)) return false;
        }
        return true;
    }

    bool dfs(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        long lo = std::numeric_limits<long>::min(), hi = std::numeric_limits<long>::max();
        bool anchored = false;
        for (std::size_t i = 0; i < depth; ++i) {
            int u = order_[i];
            if (!g_.adjacent(u, v)) continue;
            lo = std::max(lo, cells_[u].q - 1);
            hi = std::min(hi, cells_[u].q + 1);
            anchored = true;
        }
        if (!anchored) {
            // First vertex of a component: pin it at the next free integer.
            long right = -2;
            for (std::size_t i = 0; i < depth; ++i) right = std::max(right, cells_[order_[i]].q);
            if (depth == 0) {
                classes_ = 1;
                return place(v, Cell{0, 0}, depth);
            }
            return place(v, Cell{right + 3, 0}, depth);
        }
        for (long q = lo; q <= hi; ++q) {
            for (int slot = 0; slot < 2 * classes_; ++slot) {
                bool fresh = slot % 2 == 1;
                int r = slot / 2 + (fresh ? 1 : 0);
                if (fresh) shift_ranks(r, +1);
                if (place(v, Cell{q, r}, depth)) return true;
                if (fresh) shift_ranks(r, -1);
                if (stats_.aborted) return false;
            }
        }
        return false;
    }

    // Tries every allowed flag pair for v at the given cell position.
    bool place(int v, Cell c, std::size_t depth) {
        for (auto [lc, rc] : flags_) {
            if (limits_.max_nodes && stats_.nodes >= limits_.max_nodes) {
                stats_.aborted = true;
                return false;
            }
            ++stats_.nodes;
            c.lc = lc;
            c.rc = rc;
            if (!fits(v, c, depth)) continue;
            cells_[v] = c;
            placed_[v] = true;
            bool done = dfs(depth + 1);
            placed_[v] = false;
            if (done) return true;
            if (stats_.aborted) return false;
        }
        return false;
    }

    // Opens (delta = +1) or closes (delta = -1) a new fractional class at rank r.
    void shift_ranks(int r, int delta) {
        for (int u = 0; u < g_.n(); ++u)
            if (placed_[u] && cells_[u].r >= r) cells_[u].r += delta;
        classes_ += delta;
    }

    const Graph& g_;
    std::vector<int> order_;
    std::vector<Cell> cells_;
    std::vector<bool> placed_;
    int classes_ = 0;
    std::vector<std::pair<bool, bool>> flags_;
    SearchLimits limits_;
    SearchStats& stats_;
};

}  // namespace

std::optional<Representation> synthesize(const Graph& g, TypeSet allowed, const SearchLimits& limits,
                                         SearchStats* stats) {
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    if (allowed.empty()) return g.n() == 0 ? std::optional<Representation>(Representation{}) : std::nullopt;
    return OrderSearch(g, allowed, limits, st).run();
}

std::optional<Representation> synthesize_on_grid(const Graph& g, TypeSet allowed, const SearchLimits& limits,
                                                 SearchStats* stats) {
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    if (allowed.empty()) return g.n() == 0 ? std::optional<Representation>(Representation{}) : std::nullopt;
    const long unit = 2L * std::max(1, g.n());
    const long inf = std::numeric_limits<long>::max() / 4;
    GridSearch search(g, allowed, unit, -inf, inf, true);
    std::optional<Representation> found;
    search.run(
        [&](const std::vector<Slot>& slots) {
            found = to_rep(slots, unit);
            return false;
        },
        limits, st);
    return found;
}

std::vector<RepType> enumerate_injective_reps(const Graph& g, const Rational& window, const EnumerateOptions& opt) {
    if (g.n() > 6) throw std::invalid_argument("enumerate_injective_reps supports at most 6 vertices");
    const long unit = 2L * std::max(1, g.n());
    Rational top = (window - 1) * unit;
    if (top < 0) return {};
    const long kmax = mpz_class(floor(top)).get_si();
    GridSearch search(g, TypeSet::all(), unit, 0, kmax, false);
    std::map<std::vector<std::string>, Representation> types;
    SearchStats st;
    search.run(
        [&](const std::vector<Slot>& slots) {
            long shift = slots.empty() ? 0 : slots.front().k;
            for (const Slot& s : slots) shift = std::min(shift, s.k);
            if (shift != 0) return true;  // translates of a layout touching 0 add nothing
            Representation rep = to_rep(slots, unit);
            auto key = type_key(rep, opt.identify_free_ends);
            Representation m = mirror(rep);
            Rational lo = m.size() ? m[0].left : Rational(0);
            for (const auto& iv : m.intervals) lo = std::min(lo, iv.left);
            m = translate(m, -lo);
            auto mkey = type_key(m, opt.identify_free_ends);
            if (mkey < key) {
                key = std::move(mkey);
                rep = std::move(m);
            }
            types.emplace(std::move(key), std::move(rep));
            return true;
        },
        {}, st);
    std::vector<RepType> out;
    for (auto& [key, rep] : types) out.push_back({key, rep});
    return out;
}

}  // namespace mui
