#include "mui/classifier.hpp"

#include <algorithm>
#include <numeric>

namespace mui {

namespace {

// Maximum cardinality search; returns the visit order (reverse of a perfect
// elimination order when g is chordal).
std::vector<int> mcs_order(const Graph& g) {
    const int n = g.n();
    std::vector<int> weight(n, 0);
    std::vector<bool> done(n, false);
    std::vector<std::vector<int>> buckets(n + 1);
    for (int v = n - 1; v >= 0; --v) buckets[0].push_back(v);
    std::vector<int> order;
    int top = 0;
    while (static_cast<int>(order.size()) < n) {
        while (top >= 0 && buckets[top].empty()) --top;
        int v = buckets[top].back();
        buckets[top].pop_back();
        if (done[v] || weight[v] != top) continue;
        done[v] = true;
        order.push_back(v);
        for (int w : g.neighbors(v))
            if (!done[w]) {
                ++weight[w];
                buckets[weight[w]].push_back(w);
                top = std::max(top, weight[w]);
            }
    }
    return order;
}

struct Elimination {
    std::vector<int> peo;                 // elimination order
    std::vector<int> pos;                 // vertex -> index in peo
    std::vector<std::vector<int>> later;  // neighbors eliminated after v, by pos
    std::vector<int> parent;              // earliest later neighbor or -1
};

Elimination eliminate(const Graph& g) {
    Elimination e;
    e.peo = mcs_order(g);
    std::reverse(e.peo.begin(), e.peo.end());
    e.pos.assign(g.n(), 0);
    for (int i = 0; i < g.n(); ++i) e.pos[e.peo[i]] = i;
    e.later.assign(g.n(), {});
    e.parent.assign(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        for (int w : g.neighbors(v))
            if (e.pos[w] > e.pos[v]) e.later[v].push_back(w);
        std::sort(e.later[v].begin(), e.later[v].end(), [&](int a, int b) { return e.pos[a] < e.pos[b]; });
        if (!e.later[v].empty()) e.parent[v] = e.later[v].front();
    }
    return e;
}

bool is_peo(const Graph& g, const Elimination& e) {
    for (int v = 0; v < g.n(); ++v) {
        if (e.parent[v] < 0) continue;
        int p = e.parent[v];
        for (std::size_t k = 1; k < e.later[v].size(); ++k)
            if (!g.adjacent(p, e.later[v][k])) return false;
    }
    return true;
}

std::vector<std::vector<int>> cliques_from(const Elimination& e) {
    const int n = static_cast<int>(e.peo.size());
    std::vector<bool> maximal(n, true);
    for (int u = 0; u < n; ++u) {
        int p = e.parent[u];
        if (p >= 0 && e.later[u].size() == e.later[p].size() + 1) maximal[p] = false;
    }
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (!maximal[v]) continue;
        std::vector<int> c = e.later[v];
        c.push_back(v);
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

class CliqueOrderSearch {
public:
    CliqueOrderSearch(int n, const std::vector<std::vector<int>>& cliques)
        : cliques_(cliques), remaining_(n, 0), status_(n, 0), used_(cliques.size(), false) {
        for (const auto& c : cliques_)
            for (int v : c) ++remaining_[v];
    }

    std::optional<std::vector<int>> run() {
        if (cliques_.empty()) return std::vector<int>{};
        if (dfs()) return order_;
        return std::nullopt;
    }

private:
    enum : char { unseen = 0, open = 1, closed = 2 };

    bool dfs() {
        if (order_.size() == cliques_.size()) return true;
        for (std::size_t k = 0; k < cliques_.size(); ++k) {
            if (used_[k] || !fits(k)) continue;
            auto saved = status_;
            apply(k);
            if (dfs()) return true;
            undo(k, saved);
        }
        return false;
    }

    bool fits(std::size_t k) const {
        const auto& c = cliques_[k];
        for (int v : c)
            if (status_[v] == closed) return false;
        if (!order_.empty()) {
            const auto& last = cliques_[order_.back()];
            for (int v : last)
                if (!std::binary_search(c.begin(), c.end(), v) && remaining_[v] > 0) return false;
        }
        return true;
    }

    void apply(std::size_t k) {
        if (!order_.empty())
            for (int v : cliques_[order_.back()])
                if (!std::binary_search(cliques_[k].begin(), cliques_[k].end(), v)) status_[v] = closed;
        for (int v : cliques_[k]) {
            status_[v] = open;
            --remaining_[v];
        }
        used_[k] = true;
        order_.push_back(static_cast<int>(k));
    }

    void undo(std::size_t k, const std::vector<char>& saved) {
        order_.pop_back();
        used_[k] = false;
        for (int v : cliques_[k]) ++remaining_[v];
        status_ = saved;
    }

    const std::vector<std::vector<int>>& cliques_;
    std::vector<int> remaining_;
    std::vector<char> status_;
    std::vector<bool> used_;
    std::vector<int> order_;
};

TwinReduction identity_reduction(const Graph& g) {
    TwinReduction t;
    t.reduced = g;
    t.class_map.resize(g.n());
    std::iota(t.class_map.begin(), t.class_map.end(), 0);
    t.representative = t.class_map;
    for (int v = 0; v < g.n(); ++v) t.classes.push_back({v});
    return t;
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    auto e = eliminate(g);
    if (!is_peo(g, e)) throw std::invalid_argument("maximal_cliques requires a chordal graph");
    return cliques_from(e);
}

bool is_consecutive_clique_order(const Graph& g, const std::vector<std::vector<int>>& order) {
    std::vector<int> first(g.n(), -1), last(g.n(), -1), count(g.n(), 0);
    for (int k = 0; k < static_cast<int>(order.size()); ++k)
        for (int v : order[k]) {
            if (first[v] < 0) first[v] = k;
            last[v] = k;
            ++count[v];
        }
    for (int v = 0; v < g.n(); ++v)
        if (count[v] > 0 && last[v] - first[v] + 1 != count[v]) return false;
    return true;
}

IntervalCheck is_interval(const Graph& g) {
    IntervalCheck r;
    auto e = eliminate(g);
    if (!is_peo(g, e)) {
        r.obstruction = "not_chordal";
        return r;
    }
    auto cliques = cliques_from(e);
    auto order = CliqueOrderSearch(g.n(), cliques).run();
    if (!order) {
        r.obstruction = "no_consecutive_clique_order";
        return r;
    }
    r.interval = true;
    for (int k : *order) r.clique_order.push_back(cliques[k]);
    return r;
}

bool contains(ClassLabel graph_label, ClassLabel cls) { return graph_label >= cls; }

ClassReport classify(const Graph& g, const ClassifyOptions& opt) {
    ClassReport r;
    r.twin_reduction = opt.reduce_twins ? reduce_twins(g) : identity_reduction(g);
    const Graph& h = r.twin_reduction.reduced;
    auto iv = is_interval(h);
    if (!iv.interval) {
        r.label = ClassLabel::NotInterval;
        r.interval_obstruction = iv.obstruction;
        return r;
    }
    r.label = ClassLabel::IntervalOnly;
    for (ClassLabel c : {ClassLabel::Mixed, ClassLabel::AlmostMixed, ClassLabel::UPM, ClassLabel::Unit}) {
        if (auto w = screen(h, c))
            r.witnesses.emplace(c, *w);
        else if (r.label == static_cast<ClassLabel>(static_cast<int>(c) - 1))
            r.label = c;
    }
    return r;
}

MembershipChain membership_chain(const ClassReport& r) {
    MembershipChain m;
    if (r.label == ClassLabel::NotInterval) return m;
    m.interval = true;
    m.mixed = !r.witnesses.count(ClassLabel::Mixed);
    m.almost_mixed = !r.witnesses.count(ClassLabel::AlmostMixed);
    m.upm = !r.witnesses.count(ClassLabel::UPM);
    m.unit = !r.witnesses.count(ClassLabel::Unit);
    return m;
}

MembershipChain membership_chain(const Graph& g) { return membership_chain(classify(g)); }

Json to_json(const ClassReport& r, const Graph& g) {
    Json j;
    j["class"] = to_string(r.label);
    j["vertices"] = g.n();
    j["reduced_vertices"] = r.twin_reduction.reduced.n();
    if (!r.interval_obstruction.empty()) j["interval_obstruction"] = r.interval_obstruction;
    Json ws = Json::array();
    for (const auto& [cls, w] : r.witnesses) {
        Json e;
        e["outside"] = to_string(cls);
        e["family"] = w.family.display();
        Json emb = Json::array();
        for (int x : w.embedding.map) {
            int orig = r.twin_reduction.representative[x];
            emb.push_back(g.has_labels() ? Json(g.labels()[orig]) : Json(orig));
        }
        e["embedding"] = std::move(emb);
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

}  // namespace mui
