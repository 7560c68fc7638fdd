#pragma once

#include <span>
#include <vector>

#include "hamfactor/cycle_cover.hpp"
#include "hamfactor/graph.hpp"

namespace hamfactor {

struct HamCycle {
    std::vector<Vertex> order;
};

// True iff h visits each of the n vertices exactly once and every cyclically
// consecutive pair {a, b} is an edge of f, or both a and b are exposed
// (exposed_preimage[a], exposed_preimage[b] != kNoVertex) with preimages
// adjacent in g.
bool verify_ham_cycle(const HamCycle& h, const Graph& g, const CycleCover& f,
                      std::span<const Vertex> exposed_preimage);

// True iff h is a Hamilton cycle of g itself.
bool is_hamilton_cycle(const HamCycle& h, const Graph& g);

}  // namespace hamfactor
