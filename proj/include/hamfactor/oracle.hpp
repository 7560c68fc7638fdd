#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hamfactor/cycle_cover.hpp"
#include "hamfactor/graph.hpp"
#include "hamfactor/verify.hpp"

namespace hamfactor {

inline constexpr std::size_t kHeldKarpMaxN = 22;
inline constexpr std::size_t kEnumerateMaxN = 9;

// Exact Hamiltonicity by subset dynamic programming. Throws
// std::invalid_argument when n exceeds kHeldKarpMaxN.
std::optional<HamCycle> held_karp(const Graph& g);

// Plain backtracking over vertex orders starting at 0; used to cross-check
// held_karp on tiny graphs.
bool hamiltonian_by_backtracking(const Graph& g);

// Same cover with each cycle oriented as cycle_decomposition does.
CycleCover canonical_form(const CycleCover& cover);

// Every 2-factor of K_n in canonical form, without duplicates.
// Requires 3 <= n <= kEnumerateMaxN.
std::vector<CycleCover> enumerate_two_factors(std::size_t n);

struct ChiSquare {
    double statistic = 0.0;
    double p_value = 1.0;
};

// Pearson test of counts against the uniform law on `universe` outcomes, p-value
// by the Wilson-Hilferty cube-root approximation. Throws std::invalid_argument
// when universe < 2, counts.size() != universe, or the total is below
// 10 * universe.
ChiSquare chi_square_uniformity(std::span<const std::uint64_t> counts, std::size_t universe);

// Upper tail of the chi-square law with df degrees of freedom (Wilson-Hilferty).
double chi_square_upper_tail(double statistic, double df);

}  // namespace hamfactor
