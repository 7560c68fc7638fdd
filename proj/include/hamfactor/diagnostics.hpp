#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hamfactor/cycle_cover.hpp"
#include "hamfactor/generators.hpp"
#include "hamfactor/graph.hpp"
#include "hamfactor/rng.hpp"

namespace hamfactor {

// S_{t+1} = growth * S_t - loss * B_t with B_t ~ Bin(floor(S_t), p), S_0 = 1.
// S stays real valued; only the Binomial count is floored.
struct BranchingParams {
    double p = 0.0;
    double growth = 3.99;
    long long loss = 4;
    std::size_t t_max = 10;

    void validate() const;
};

// Deterministic trajectory of the p = 0 process.
std::vector<double> branching_trajectory_noloss(const BranchingParams& params);

// Fraction of trials with S_{t_max} >= threshold. A run is extinct once S <= 0.
double simulate_branching(const BranchingParams& params, std::size_t trials, double threshold, Rng& rng);

// Probability that the pairs {0,1}, {2,3}, ..., {2m-2, 2m-1} all land on edges
// of g under a uniform random bijection.
double matching_embed_probability(const Graph& g, std::size_t m, std::size_t trials, Rng& rng);
// Same on the circulant d-regular graph on n vertices.
double matching_embed_probability(std::size_t n, std::size_t d, std::size_t m, std::size_t trials, Rng& rng);

struct CycleCountStats {
    double mean_cycles = 0.0;
    // (t, mean number of cycles of length <= t)
    std::vector<std::pair<std::size_t, double>> mean_short;
};

CycleCountStats cycle_count_stats(SamplerMode mode, std::size_t n, std::size_t trials,
                                  const std::vector<std::size_t>& ts, Rng& rng);

struct MomentBound {
    std::size_t m = 0;
    double value = 0.0;
};

// n^{-0.02} (d / 1.5)^m.
double first_moment_value(std::size_t n, std::size_t d, std::size_t m);
// m = sum of cut counts of the cover's cycles at spacing a (0 means n / ln n).
// Throws std::invalid_argument when some cycle is shorter than 3 m_i.
MomentBound first_moment_bound(std::size_t n, std::size_t d, const CycleCover& cover, double a = 0.0);

}  // namespace hamfactor
