#include "hamfactor/diagnostics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hamfactor/phase2.hpp"

namespace hamfactor {

void BranchingParams::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("branching p must lie in [0, 1]");
    if (!(growth > 1.0)) throw std::invalid_argument("branching growth must exceed 1");
    if (loss < 0) throw std::invalid_argument("branching loss must be non-negative");
}

std::vector<double> branching_trajectory_noloss(const BranchingParams& params) {
    params.validate();
    std::vector<double> s{1.0};
    for (std::size_t t = 0; t < params.t_max; ++t) s.push_back(params.growth * s.back());
    return s;
}

double simulate_branching(const BranchingParams& params, std::size_t trials, double threshold, Rng& rng) {
    params.validate();
    if (trials == 0) throw std::invalid_argument("simulate_branching needs at least one trial");
    std::size_t survived = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        double s = 1.0;
        for (std::size_t t = 0; t < params.t_max && s > 0.0; ++t) {
            long long b = 0;
            if (params.p > 0.0) {
                std::binomial_distribution<long long> bin(static_cast<long long>(std::floor(s)), params.p);
                b = bin(rng);
            }
            s = params.growth * s - static_cast<double>(params.loss * b);
        }
        if (s > 0.0 && s >= threshold) ++survived;
    }
    return static_cast<double>(survived) / static_cast<double>(trials);
}

double matching_embed_probability(const Graph& g, std::size_t m, std::size_t trials, Rng& rng) {
    const std::size_t n = g.num_vertices();
    if (2 * m > n) throw std::invalid_argument("matching larger than the vertex set");
    if (trials == 0) throw std::invalid_argument("matching_embed_probability needs at least one trial");
    if (m == 0) return 1.0;
    // Partial Fisher-Yates: only the first 2m images are drawn.
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
    std::size_t hits = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        bool all = true;
        for (std::size_t i = 0; i < 2 * m; ++i) {
            std::swap(perm[i], perm[i + rng.below(n - i)]);
            if (i % 2 == 1 && !g.has_edge(perm[i - 1], perm[i])) {
                all = false;
                break;
            }
        }
        if (all) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

double matching_embed_probability(std::size_t n, std::size_t d, std::size_t m, std::size_t trials, Rng& rng) {
    return matching_embed_probability(deterministic_family(GraphFamily::circulant, n, d), m, trials, rng);
}

CycleCountStats cycle_count_stats(SamplerMode mode, std::size_t n, std::size_t trials,
                                  const std::vector<std::size_t>& ts, Rng& rng) {
    if (trials == 0) throw std::invalid_argument("cycle_count_stats needs at least one trial");
    CycleCountStats out;
    std::vector<double> sums(ts.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        const CycleCover f = sample_two_factor(n, mode, rng);
        total += static_cast<double>(f.num_cycles());
        for (std::size_t len : f.cycle_lengths())
            for (std::size_t j = 0; j < ts.size(); ++j)
                if (len <= ts[j]) sums[j] += 1.0;
    }
    const auto tr = static_cast<double>(trials);
    out.mean_cycles = total / tr;
    for (std::size_t j = 0; j < ts.size(); ++j) out.mean_short.emplace_back(ts[j], sums[j] / tr);
    return out;
}

double first_moment_value(std::size_t n, std::size_t d, std::size_t m) {
    return std::pow(static_cast<double>(n), -0.02) * std::pow(static_cast<double>(d) / 1.5, static_cast<double>(m));
}

MomentBound first_moment_bound(std::size_t n, std::size_t d, const CycleCover& cover, double a) {
    if (a <= 0.0) a = static_cast<double>(n) / std::log(static_cast<double>(n));
    MomentBound out;
    for (std::size_t len : cover.cycle_lengths()) {
        const std::size_t mi = cut_count(len, a);
        if (len < 3 * mi) throw std::invalid_argument("cycle too short for its cut count");
        out.m += mi;
    }
    out.value = first_moment_value(n, d, out.m);
    return out;
}

}  // namespace hamfactor
