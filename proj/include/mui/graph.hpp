#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mui {

using Edge = std::pair<int, int>;

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops, parallel edges, out-of-range
    // endpoints, or a label vector of the wrong size.
    Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    // Label if present, otherwise the decimal id.
    std::string name(int v) const;

    // All edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_ && labels_ == o.labels_; }
    bool same_edges(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    std::size_t m_ = 0;
};

enum class GraphFormat { graph6, edge_list };

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t where, bool is_line)
        : std::runtime_error(what), position(where), line_based(is_line) {}
    std::size_t position;  // byte offset (graph6) or 1-based line (edge list)
    bool line_based;
};

Graph parse_graph(std::string_view bytes, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

// Detects graph6 by its header byte range; anything containing whitespace
// between tokens is treated as an edge list.
GraphFormat sniff_format(std::string_view bytes);

std::vector<int> closed_neighborhood(const Graph& g, int v);

struct TwinReduction {
    Graph reduced;
    std::vector<int> class_map;              // original vertex -> reduced vertex
    std::vector<int> representative;         // reduced vertex -> original vertex (smallest id)
    std::vector<std::vector<int>> classes;   // reduced vertex -> original members, ascending
};

TwinReduction reduce_twins(const Graph& g);

struct Subgraph {
    Graph graph;
    std::vector<int> to_host;  // subgraph id -> host id
};

// vs may be in any order; ids are densified in ascending host order.
Subgraph induced_subgraph(const Graph& g, std::vector<int> vs);

std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace mui
