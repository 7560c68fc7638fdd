#pragma once

#include <cstddef>
#include <vector>

#include "hamfactor/cycle_cover.hpp"
#include "hamfactor/near_two_factor.hpp"

namespace hamfactor {

// The near-2-factor a round starts from: the cover with one edge deleted,
// split into components. Component 0 is the path, listed fixed end first; the
// others are the remaining cover cycles in cover order.
class RoundBase {
public:
    RoundBase(const CycleCover& cover, Vertex fixed, Vertex free);

    std::size_t num_vertices() const { return comp_of_.size(); }
    std::size_t num_components() const { return comps_.size(); }
    const std::vector<Vertex>& component(int c) const { return comps_[static_cast<std::size_t>(c)]; }
    int comp_of(Vertex v) const { return comp_of_[static_cast<std::size_t>(v)]; }
    int pos_of(Vertex v) const { return pos_of_[static_cast<std::size_t>(v)]; }
    const NearTwoFactor& near() const { return near_; }

private:
    std::vector<std::vector<Vertex>> comps_;
    std::vector<int> comp_of_;
    std::vector<int> pos_of_;
    NearTwoFactor near_;
};

// A directed run of consecutive vertices of one base component, starting at
// position `start` and stepping by `dir` (+1 or -1), cyclically for cycles.
struct Piece {
    int comp = 0;
    int start = 0;
    int len = 0;
    int dir = 1;
};

enum class RotationKind {
    invalid,
    absorb,  // w on a cycle: the cycle joins the path
    pivot,   // w on the path, x towards the free end: path reordered
    split,   // w on the path, x towards the fixed end: {w..v} closes into a cycle
};

struct RotationEffect {
    RotationKind kind = RotationKind::invalid;
    std::size_t path_size = 0;       // vertices on the path afterwards
    std::size_t new_cycle_size = 0;  // split only
};

// A near-2-factor described relative to a RoundBase as a short list of pieces,
// so that tree nodes cost O(depth) rather than O(n).
class PathState {
public:
    static PathState root(const RoundBase& base);

    Vertex fixed_end() const { return fixed_; }
    Vertex free_end() const { return free_; }
    std::size_t path_size() const { return path_size_; }
    std::size_t num_cycles(const RoundBase& base) const {
        return base.num_components() - 1 - absorbed_.size() + new_cycles_.size();
    }

    // Effect of R(L; free_end, w, x) without applying it.
    RotationEffect classify(const RoundBase& base, const RotationRecord& r) const;
    PathState rotated(const RoundBase& base, const RotationRecord& r) const;
    // Same near-2-factor with fixed and free ends exchanged.
    PathState reversed(const RoundBase& base) const;

    // Where w currently sits: on the path or on a cycle of `size` vertices,
    // with its two neighbours (kNoVertex past a path end).
    struct Neighborhood {
        bool on_path = false;
        std::size_t size = 0;
        Vertex prev = kNoVertex;
        Vertex next = kNoVertex;
    };
    Neighborhood neighborhood(const RoundBase& base, Vertex w) const;

    std::vector<Vertex> path_vertices(const RoundBase& base) const;
    std::vector<std::vector<Vertex>> new_cycle_vertices(const RoundBase& base) const;
    const std::vector<int>& absorbed_components() const { return absorbed_; }

private:
    enum class Where { path, new_cycle, base_cycle };
    struct Location {
        Where where = Where::path;
        std::size_t index = 0;   // new cycle index or base component
        std::size_t offset = 0;  // position along the path / cycle listing
        std::size_t size = 0;    // size of the containing component
        Vertex prev = kNoVertex;
        Vertex next = kNoVertex;
    };
    Location locate(const RoundBase& base, Vertex w) const;

    std::vector<Piece> path_;
    std::vector<std::vector<Piece>> new_cycles_;
    std::vector<int> absorbed_;
    std::size_t path_size_ = 0;
    Vertex fixed_ = kNoVertex;
    Vertex free_ = kNoVertex;
};

// Rotation acceptability: a path of at least n0 vertices stays that long and
// every newly created cycle has at least n0 vertices.
bool is_acceptable(const RotationEffect& effect, std::size_t path_size_before, std::size_t n0);

}  // namespace hamfactor
