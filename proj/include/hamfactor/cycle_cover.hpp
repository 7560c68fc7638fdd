#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "hamfactor/graph.hpp"

namespace hamfactor {

// A 2-factor stored as successor/predecessor arrays. Cycles are numbered in
// order of their smallest vertex; cycle_vertices(i) starts at that vertex.
class CycleCover {
public:
    CycleCover() = default;

    // Throws std::invalid_argument unless succ is a permutation whose orbits
    // all have length >= 3.
    static CycleCover from_successors(std::vector<Vertex> succ);

    std::size_t num_vertices() const { return succ_.size(); }
    std::size_t num_cycles() const { return cycle_lengths_.size(); }

    Vertex succ(Vertex v) const { return succ_[static_cast<std::size_t>(v)]; }
    Vertex pred(Vertex v) const { return pred_[static_cast<std::size_t>(v)]; }
    int cycle_id(Vertex v) const { return cycle_id_[static_cast<std::size_t>(v)]; }
    std::size_t cycle_length(int id) const { return cycle_lengths_[static_cast<std::size_t>(id)]; }
    const std::vector<std::size_t>& cycle_lengths() const { return cycle_lengths_; }
    std::size_t min_cycle_length() const;

    Vertex cycle_start(int id) const { return cycle_start_[static_cast<std::size_t>(id)]; }
    std::vector<Vertex> cycle_vertices(int id) const;

    bool has_edge(Vertex u, Vertex v) const;
    std::vector<Edge> edges() const;

    bool check_invariants() const;

    friend bool operator==(const CycleCover& a, const CycleCover& b) { return a.succ_ == b.succ_; }

private:
    std::vector<Vertex> succ_;
    std::vector<Vertex> pred_;
    std::vector<int> cycle_id_;
    std::vector<std::size_t> cycle_lengths_;
    std::vector<Vertex> cycle_start_;
};

// Decomposes a 2-regular graph into its cycles. Each cycle is oriented from its
// smallest vertex toward the smaller of that vertex's two neighbours.
// Throws std::invalid_argument if some vertex has degree != 2.
CycleCover cycle_decomposition(const Graph& g);

// Same convention, for a graph given as neighbour pairs.
CycleCover cycle_decomposition(std::span<const std::array<Vertex, 2>> neighbors);

// Sorted vertex sets of the cycles shorter than n0, sorted lexicographically.
std::vector<std::vector<Vertex>> short_cycles(const CycleCover& cover, std::size_t n0);

}  // namespace hamfactor
