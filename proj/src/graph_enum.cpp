#include "mui/graph_enum.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace mui {

namespace {

using Mask = std::uint32_t;

constexpr int kMaxN = 8;

int bit_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

Mask to_mask(const Graph& g) {
    Mask m = 0;
    for (auto [u, v] : g.edges()) m |= Mask{1} << bit_index(u, v);
    return m;
}

Graph from_mask(int n, Mask m) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (m >> bit_index(i, j) & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

bool has(Mask m, int i, int j) { return m >> bit_index(i, j) & 1; }

// Smallest relabelled mask over permutations that list vertices by
// descending degree (ties permuted freely).
Mask canonical_mask(int n, Mask m) {
    std::vector<int> deg(n, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (has(m, i, j)) ++deg[i], ++deg[j];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    std::vector<std::pair<int, int>> blocks;
    for (int s = 0; s < n;) {
        int e = s;
        while (e < n && deg[order[e]] == deg[order[s]]) ++e;
        blocks.emplace_back(s, e);
        s = e;
    }
    Mask best = ~Mask{0};
    // Odometer over per-block permutations.
    for (auto [s, e] : blocks) std::sort(order.begin() + s, order.begin() + e);
    while (true) {
        Mask cur = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (has(m, order[i], order[j])) cur |= Mask{1} << bit_index(i, j);
        best = std::min(best, cur);
        int b = static_cast<int>(blocks.size()) - 1;
        for (; b >= 0; --b) {
            auto [s, e] = blocks[b];
            if (std::next_permutation(order.begin() + s, order.begin() + e)) break;
        }
        if (b < 0) break;
    }
    return best;
}

}  // namespace

Graph canonical_form(const Graph& g) {
    if (g.n() > kMaxN) throw std::invalid_argument("canonical_form supports at most 8 vertices");
    return from_mask(g.n(), canonical_mask(g.n(), to_mask(g)));
}

std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > kMaxN) throw std::invalid_argument("all_graphs supports 0..8 vertices");
    std::vector<Mask> level{0};
    for (int k = 1; k < n; ++k) {
        std::unordered_set<Mask> next;
        for (Mask m : level)
            for (Mask sub = 0; sub < (Mask{1} << k); ++sub) {
                Mask ext = m;
                for (int i = 0; i < k; ++i)
                    if (sub >> i & 1) ext |= Mask{1} << bit_index(i, k);
                next.insert(canonical_mask(k + 1, ext));
            }
        level.assign(next.begin(), next.end());
    }
    std::sort(level.begin(), level.end());
    std::vector<Graph> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (Mask m : level) out.push_back(from_mask(n, m));
    return out;
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (n > 0 && is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace mui
