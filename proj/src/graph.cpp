#include "hamfactor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hamfactor {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n), num_edges_(edges.size()) {
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.v) >= n) {
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                        std::to_string(e.v));
        }
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& adj = adjacency_[v];
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
        }
    }
    if (n > 0) {
        auto [lo, hi] = std::minmax_element(adjacency_.begin(), adjacency_.end(),
                                            [](const auto& a, const auto& b) { return a.size() < b.size(); });
        min_degree_ = lo->size();
        max_degree_ = hi->size();
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= adjacency_.size()) return false;
    const auto& adj = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
        }
    }
    return out;
}

bool Graph::check_invariants() const {
    std::size_t lo = adjacency_.empty() ? 0 : adjacency_.front().size();
    std::size_t hi = lo;
    std::size_t half_edges = 0;
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        const auto& adj = adjacency_[u];
        if (!std::is_sorted(adj.begin(), adj.end())) return false;
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) return false;
        for (Vertex v : adj) {
            if (v == static_cast<Vertex>(u)) return false;
            if (!has_edge(v, static_cast<Vertex>(u))) return false;
        }
        lo = std::min(lo, adj.size());
        hi = std::max(hi, adj.size());
        half_edges += adj.size();
    }
    return lo == min_degree_ && hi == max_degree_ && half_edges == 2 * num_edges_;
}

}  // namespace hamfactor
