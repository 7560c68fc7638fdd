#include "hamfactor/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace hamfactor {

std::optional<HamCycle> held_karp(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n > kHeldKarpMaxN)
        throw std::invalid_argument("held_karp supports at most " + std::to_string(kHeldKarpMaxN) + " vertices");
    if (n < 3) return std::nullopt;
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(static_cast<Vertex>(v))) adj[v] |= 1u << u;

    // ends[mask]: vertices v such that some path from 0 covers exactly mask and ends at v.
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    ends[1] = 1;
    for (std::uint32_t mask = 1; mask <= full; mask += 2) {
        std::uint32_t e = ends[mask];
        while (e) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t next = adj[static_cast<std::size_t>(v)] & ~mask;
            while (next) {
                const int u = std::countr_zero(next);
                next &= next - 1;
                ends[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    const std::uint32_t closing = ends[full] & adj[0];
    if (!closing) return std::nullopt;

    HamCycle h;
    std::uint32_t mask = full;
    int v = std::countr_zero(closing);
    while (v != 0) {
        h.order.push_back(static_cast<Vertex>(v));
        const std::uint32_t prev_mask = mask & ~(1u << v);
        const std::uint32_t cand = ends[prev_mask] & adj[static_cast<std::size_t>(v)];
        v = std::countr_zero(cand);
        mask = prev_mask;
    }
    h.order.push_back(0);
    std::reverse(h.order.begin(), h.order.end());
    return h;
}

bool hamiltonian_by_backtracking(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n < 3) return false;
    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
    // All orders fixing vertex 0 first.
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = g.has_edge(order[i], order[(i + 1) % n]);
        if (ok) return true;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
}

CycleCover canonical_form(const CycleCover& cover) {
    std::vector<std::array<Vertex, 2>> nb(cover.num_vertices());
    for (std::size_t v = 0; v < nb.size(); ++v) {
        const auto x = static_cast<Vertex>(v);
        nb[v] = {cover.pred(x), cover.succ(x)};
    }
    return cycle_decomposition(nb);
}

std::vector<CycleCover> enumerate_two_factors(std::size_t n) {
    if (n < 3 || n > kEnumerateMaxN)
        throw std::invalid_argument("enumerate_two_factors needs 3 <= n <= " + std::to_string(kEnumerateMaxN));
    std::vector<CycleCover> out;
    std::vector<Vertex> succ(n, kNoVertex);
    std::vector<Vertex> cycle;

    // Cycles are built from the smallest uncovered vertex; the second vertex is
    // smaller than the last so each undirected cycle appears once.
    std::function<void()> place_next;
    std::function<void()> extend = [&]() {
        const Vertex head = cycle.front();
        if (cycle.size() >= 3 && cycle[1] < cycle.back()) {
            for (std::size_t i = 0; i < cycle.size(); ++i)
                succ[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
            const std::vector<Vertex> saved = cycle;
            place_next();
            cycle = saved;
            for (Vertex v : cycle) succ[static_cast<std::size_t>(v)] = kNoVertex;
        }
        for (std::size_t u = static_cast<std::size_t>(head) + 1; u < n; ++u) {
            const auto x = static_cast<Vertex>(u);
            if (succ[u] != kNoVertex || std::find(cycle.begin(), cycle.end(), x) != cycle.end()) continue;
            cycle.push_back(x);
            extend();
            cycle.pop_back();
        }
    };
    place_next = [&]() {
        std::size_t first = 0;
        while (first < n && succ[first] != kNoVertex) ++first;
        if (first == n) {
            out.push_back(canonical_form(CycleCover::from_successors(succ)));
            return;
        }
        const std::vector<Vertex> saved = cycle;
        cycle = {static_cast<Vertex>(first)};
        extend();
        cycle = saved;
    };
    place_next();
    return out;
}

double chi_square_upper_tail(double statistic, double df) {
    if (df <= 0.0) throw std::invalid_argument("chi-square needs positive degrees of freedom");
    if (statistic <= 0.0) return 1.0;
    const double s = 2.0 / (9.0 * df);
    const double z = (std::cbrt(statistic / df) - (1.0 - s)) / std::sqrt(s);
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

ChiSquare chi_square_uniformity(std::span<const std::uint64_t> counts, std::size_t universe) {
    if (universe < 2) throw std::invalid_argument("chi-square needs at least two outcomes");
    if (counts.size() != universe) throw std::invalid_argument("count vector does not match the universe size");
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total < 10 * universe) throw std::invalid_argument("chi-square input is undersampled");
    const double expected = static_cast<double>(total) / static_cast<double>(universe);
    ChiSquare out;
    for (auto c : counts) {
        const double diff = static_cast<double>(c) - expected;
        out.statistic += diff * diff / expected;
    }
    out.p_value = chi_square_upper_tail(out.statistic, static_cast<double>(universe - 1));
    return out;
}

}  // namespace hamfactor
