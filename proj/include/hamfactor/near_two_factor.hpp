#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hamfactor/cycle_cover.hpp"
#include "hamfactor/graph.hpp"

namespace hamfactor {

// R(L; v, w, x): drop {w, x}, add {v, w}, where v is the free path end.
struct RotationRecord {
    Vertex v = kNoVertex;
    Vertex w = kNoVertex;
    Vertex x = kNoVertex;

    RotationRecord inverse() const { return {x, w, v}; }
    friend bool operator==(const RotationRecord&, const RotationRecord&) = default;
};

// Spanning union of vertex-disjoint cycles and exactly one path with at least
// two vertices. The path has a fixed end and a free end; rotations act on the
// free end.
class NearTwoFactor {
public:
    NearTwoFactor() = default;

    std::size_t num_vertices() const { return nbr_.size(); }
    Vertex fixed_end() const { return fixed_; }
    Vertex free_end() const { return free_; }

    const std::array<Vertex, 2>& neighbors(Vertex v) const { return nbr_[static_cast<std::size_t>(v)]; }
    bool has_edge(Vertex a, Vertex b) const;

    // Path from the fixed end to the free end.
    std::vector<Vertex> path() const;
    std::size_t path_size() const { return path().size(); }
    // Cycles other than the path, each listed from its smallest vertex, sorted by that vertex.
    std::vector<std::vector<Vertex>> cycles() const;
    std::vector<std::vector<Vertex>> short_cycles(std::size_t n0) const;

    // Exchanges the roles of the fixed and free end.
    void swap_ends() { std::swap(fixed_, free_); }

    // True when r satisfies the rotation preconditions on this near-2-factor.
    bool can_rotate(const RotationRecord& r) const;
    // In-place rotation; throws std::logic_error if !can_rotate(r).
    void apply(const RotationRecord& r);

    // Adds the edge between the two path ends.
    CycleCover close() const;

    bool check_invariants() const;

    friend bool operator==(const NearTwoFactor&, const NearTwoFactor&) = default;

private:
    friend NearTwoFactor delete_edge(const CycleCover&, Vertex, Vertex);

    void unlink(Vertex a, Vertex b);
    void link(Vertex a, Vertex b);
    Vertex path_neighbor(Vertex end) const;

    std::vector<std::array<Vertex, 2>> nbr_;
    Vertex fixed_ = kNoVertex;
    Vertex free_ = kNoVertex;
};

// Removes the cover edge {fixed, free}; throws std::invalid_argument if it is
// not an edge of the cover.
NearTwoFactor delete_edge(const CycleCover& cover, Vertex fixed, Vertex free);

// Functional form of NearTwoFactor::apply.
NearTwoFactor rotate(NearTwoFactor l, const RotationRecord& r);

}  // namespace hamfactor
