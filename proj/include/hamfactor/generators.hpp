#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hamfactor/cycle_cover.hpp"
#include "hamfactor/graph.hpp"
#include "hamfactor/rng.hpp"

namespace hamfactor {

enum class SamplerMode {
    pairing_uniform,        // exactly uniform over labelled 2-factors
    permutation_projected,  // uniform permutation without 1- and 2-cycles, orientation forgotten
};

SamplerMode parse_sampler_mode(std::string_view name);
std::string_view to_string(SamplerMode mode);

enum class GraphFamily { disjoint_cliques, circulant, prism };

GraphFamily parse_graph_family(std::string_view name);
std::string_view to_string(GraphFamily family);

// Thrown when a rejection sampler runs out of attempts.
class SamplerExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxAttempts = 100000;

struct SamplerStats {
    std::size_t attempts = 0;
};

// Uniform simple d-regular graph via the pairing model, rejecting loops and
// multi-edges.
Graph sample_regular(std::size_t n, std::size_t d, Rng& rng, std::size_t max_attempts = kDefaultMaxAttempts,
                     SamplerStats* stats = nullptr);

CycleCover sample_two_factor(std::size_t n, SamplerMode mode, Rng& rng,
                             std::size_t max_attempts = kDefaultMaxAttempts, SamplerStats* stats = nullptr);

// disjoint_cliques: n/(d+1) copies of K_{d+1}; circulant: offsets 1..d/2 (plus
// n/2 when d is odd); prism: two n/2-cycles joined by a perfect matching (d = 3).
Graph deterministic_family(GraphFamily family, std::size_t n, std::size_t d);

}  // namespace hamfactor
