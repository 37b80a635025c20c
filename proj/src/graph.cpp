#include "mui/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>

namespace mui {

Graph::Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : adj_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("parallel edge at " + std::to_string(v));
        m_ += a.size();
    }
    m_ /= 2;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

std::string Graph::name(int v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::size_t g6_size_bytes(int n) {
    std::uint64_t bits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    return static_cast<std::size_t>((bits + 5) / 6);
}

Graph parse_graph6(std::string_view s) {
    std::size_t base = 0;
    if (s.substr(0, kGraph6Header.size()) == kGraph6Header) {
        s.remove_prefix(kGraph6Header.size());
        base = kGraph6Header.size();
    }
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw ParseError("graph6: empty input", base, false);
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte outside 63..126 at offset " + std::to_string(base + i),
                             base + i, false);
    }
    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&](std::size_t count) {
        if (pos + count > s.size())
            throw ParseError("graph6: truncated header at offset " + std::to_string(base + pos),
                             base + pos, false);
        std::uint64_t v = 0;
        for (std::size_t k = 0; k < count; ++k) v = (v << 6) | static_cast<std::uint64_t>(s[pos++] - 63);
        return v;
    };
    if (s[0] != 126) {
        n = take(1);
    } else if (s.size() > 1 && s[1] != 126) {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    if (n > 1u << 20)
        throw ParseError("graph6: vertex count " + std::to_string(n) + " too large", base, false);
    std::size_t need = g6_size_bytes(static_cast<int>(n));
    if (s.size() - pos != need)
        throw ParseError("graph6: expected " + std::to_string(need) + " edge bytes, found " +
                             std::to_string(s.size() - pos) + " at offset " + std::to_string(base + pos),
                         base + pos, false);
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[pos + bit / 6] - 63;
            if (byte & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
        }
    }
    std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (std::size_t b = total; b < need * 6; ++b) {
        int byte = s[pos + b / 6] - 63;
        if (byte & (1 << (5 - b % 6)))
            throw ParseError("graph6: nonzero padding bit at offset " + std::to_string(base + pos + b / 6),
                             base + pos + b / 6, false);
    }
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    auto n = static_cast<std::uint64_t>(g.n());
    auto put = [&](std::uint64_t v, int chars) {
        for (int k = chars - 1; k >= 0; --k) out.push_back(static_cast<char>(63 + ((v >> (6 * k)) & 63)));
    };
    if (n <= 62) {
        put(n, 1);
    } else if (n <= 258047) {
        out.push_back(126);
        put(n, 3);
    } else {
        out.append(2, static_cast<char>(126));
        put(n, 6);
    }
    std::size_t need = g6_size_bytes(g.n());
    std::vector<int> bytes(need, 0);
    std::size_t bit = 0;
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j)) bytes[bit / 6] |= 1 << (5 - bit % 6);
    for (int b : bytes) out.push_back(static_cast<char>(63 + b));
    return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

Graph parse_edge_list(std::string_view s) {
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t line_no = 0;
    auto id_of = [&](const std::string& tok) {
        auto [it, fresh] = ids.emplace(tok, static_cast<int>(names.size()));
        if (fresh) names.push_back(tok);
        return it->second;
    };
    while (!s.empty()) {
        ++line_no;
        auto nl = s.find('\n');
        std::string_view line = s.substr(0, nl);
        s = nl == std::string_view::npos ? std::string_view{} : s.substr(nl + 1);
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        std::vector<std::string> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_space(line[i])) ++i;
            std::size_t j = i;
            while (j < line.size() && !is_space(line[j])) ++j;
            if (j > i) toks.emplace_back(line.substr(i, j - i));
            i = j;
        }
        if (toks.empty()) continue;
        if (toks.size() > 2)
            throw ParseError("edge list: line " + std::to_string(line_no) + " has " +
                                 std::to_string(toks.size()) + " tokens, expected 1 or 2",
                             line_no, true);
        int u = id_of(toks[0]);
        if (toks.size() == 1) continue;
        int v = id_of(toks[1]);
        if (u == v)
            throw ParseError("edge list: self-loop '" + toks[0] + "' on line " + std::to_string(line_no),
                             line_no, true);
        if (!seen.insert(std::minmax(u, v)).second)
            throw ParseError("edge list: repeated edge on line " + std::to_string(line_no), line_no, true);
        edges.emplace_back(u, v);
    }
    bool plain = true;
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] != std::to_string(k)) plain = false;
    const int n = static_cast<int>(names.size());
    if (plain) names.clear();
    return Graph(n, edges, std::move(names));
}

std::string emit_edge_list(const Graph& g) {
    auto es = g.edges();
    std::vector<bool> seen(g.n(), false);
    int next = 0;
    bool in_order = true;
    for (auto [u, v] : es) {
        for (int w : {u, v}) {
            if (seen[w]) continue;
            if (w != next) in_order = false;
            seen[w] = true;
            ++next;
        }
    }
    if (next != g.n()) in_order = false;
    std::string out;
    if (!in_order)
        for (int v = 0; v < g.n(); ++v) out += g.name(v) + "\n";
    for (auto [u, v] : es) out += g.name(u) + " " + g.name(v) + "\n";
    if (!out.empty()) out.pop_back();
    return out;
}

}  // namespace

Graph parse_graph(std::string_view bytes, GraphFormat format) {
    if (format == GraphFormat::graph6) return parse_graph6(bytes);
    return parse_edge_list(bytes);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? emit_graph6(g) : emit_edge_list(g);
}

GraphFormat sniff_format(std::string_view bytes) {
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r')) bytes.remove_suffix(1);
    if (bytes.substr(0, kGraph6Header.size()) == kGraph6Header) return GraphFormat::graph6;
    if (bytes.empty()) return GraphFormat::edge_list;
    for (char c : bytes)
        if (is_space(c) || c == '\n' || c == '#') return GraphFormat::edge_list;
    for (char c : bytes)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            return GraphFormat::edge_list;
    return GraphFormat::graph6;
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
    std::vector<int> out = g.neighbors(v);
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

TwinReduction reduce_twins(const Graph& g) {
    const int n = g.n();
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    std::vector<std::vector<int>> closed(n);
    std::vector<std::uint64_t> hash(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = closed_neighborhood(g, v);
        std::uint64_t h = 1469598103934665603ull ^ closed[v].size();
        for (int x : closed[v]) h = (h ^ static_cast<std::uint64_t>(x + 1)) * 1099511628211ull;
        hash[v] = h;
        buckets[h].push_back(v);
    }
    std::vector<int> rep_of(n, -1);
    for (int v = 0; v < n; ++v) {
        if (rep_of[v] != -1) continue;
        rep_of[v] = v;
        for (int w : buckets[hash[v]])
            if (w > v && rep_of[w] == -1 && closed[w] == closed[v]) rep_of[w] = v;
    }
    TwinReduction tr;
    tr.class_map.assign(n, -1);
    std::vector<int> new_id(n, -1);
    for (int v = 0; v < n; ++v) {
        if (rep_of[v] == v) {
            new_id[v] = static_cast<int>(tr.representative.size());
            tr.representative.push_back(v);
            tr.classes.emplace_back();
        }
        tr.class_map[v] = new_id[rep_of[v]];
        tr.classes[tr.class_map[v]].push_back(v);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (rep_of[u] == u && rep_of[v] == v) edges.emplace_back(new_id[u], new_id[v]);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int r : tr.representative) labels.push_back(g.labels()[r]);
    tr.reduced = Graph(static_cast<int>(tr.representative.size()), edges, std::move(labels));
    return tr;
}

Subgraph induced_subgraph(const Graph& g, std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> local(g.n(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.n()) throw std::invalid_argument("vertex out of range");
        local[vs[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int v : vs) {
        for (int w : g.neighbors(v))
            if (v < w && local[w] >= 0) edges.emplace_back(local[v], local[w]);
        if (g.has_labels()) labels.push_back(g.labels()[v]);
    }
    return {Graph(static_cast<int>(vs.size()), edges, std::move(labels)), std::move(vs)};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[c].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace mui
