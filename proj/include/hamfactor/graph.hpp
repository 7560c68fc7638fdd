#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hamfactor {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = kNoVertex;
    Vertex v = kNoVertex;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Static simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops, duplicates or out-of-range ends.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    std::size_t min_degree() const { return min_degree_; }
    std::size_t max_degree() const { return max_degree_; }
    bool is_regular(std::size_t d) const { return min_degree_ == d && max_degree_ == d; }

    // Edges in lexicographic order.
    std::vector<Edge> edges() const;

    // Symmetry, no loops, no duplicates, cached degree bounds.
    bool check_invariants() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t num_edges_ = 0;
    std::size_t min_degree_ = 0;
    std::size_t max_degree_ = 0;
};

}  // namespace hamfactor
