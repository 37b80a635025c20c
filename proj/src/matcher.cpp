#include "mui/matcher.hpp"

#include <boost/dynamic_bitset.hpp>

namespace mui {

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != pattern.n()) return false;
    std::vector<bool> used(host.n(), false);
    for (int h : e.map) {
        if (h < 0 || h >= host.n() || used[h]) return false;
        used[h] = true;
    }
    for (int x = 0; x < pattern.n(); ++x)
        for (int y = x + 1; y < pattern.n(); ++y)
            if (pattern.adjacent(x, y) != host.adjacent(e.map[x], e.map[y])) return false;
    return true;
}

namespace {

using Bits = boost::dynamic_bitset<>;

class Search {
public:
    Search(const Graph& p, const Graph& h) : p_(p), h_(h), nbr_(h.n(), Bits(h.n())), map_(p.n(), -1) {
        for (int v = 0; v < h.n(); ++v)
            for (int w : h.neighbors(v)) nbr_[v].set(w);
    }

    std::optional<Embedding> run() {
        if (p_.n() > h_.n()) return std::nullopt;
        std::vector<Bits> dom(p_.n(), Bits(h_.n()));
        for (int x = 0; x < p_.n(); ++x)
            for (int v = 0; v < h_.n(); ++v)
                if (h_.degree(v) >= p_.degree(x)) dom[x].set(v);
        if (dfs(0, dom)) return Embedding{map_};
        return std::nullopt;
    }

private:
    bool dfs(int x, const std::vector<Bits>& dom) {
        if (x == p_.n()) return true;
        for (auto v = dom[x].find_first(); v != Bits::npos; v = dom[x].find_next(v)) {
            std::vector<Bits> next(dom.begin(), dom.end());
            bool dead = false;
            for (int y = x + 1; y < p_.n() && !dead; ++y) {
                if (p_.adjacent(x, y))
                    next[y] &= nbr_[v];
                else
                    next[y] -= nbr_[v];
                next[y].reset(v);
                dead = next[y].none();
            }
            if (dead) continue;
            map_[x] = static_cast<int>(v);
            if (dfs(x + 1, next)) return true;
        }
        map_[x] = -1;
        return false;
    }

    const Graph& p_;
    const Graph& h_;
    std::vector<Bits> nbr_;
    std::vector<int> map_;
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& pattern, const Graph& host) {
    return Search(pattern, host).run();
}

std::optional<Witness> screen(const Graph& g, ClassLabel c) {
    for (const auto& id : forbidden_ids(c, g.n())) {
        auto inst = generate(id);
        if (auto e = find_induced(inst.graph, g)) return Witness{id, *e};
    }
    return std::nullopt;
}

}  // namespace mui
