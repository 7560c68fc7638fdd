#include "hamfactor/verify.hpp"

namespace hamfactor {
namespace {

template <typename EdgeTest>
bool visits_all_once_along(const HamCycle& h, std::size_t n, EdgeTest&& is_edge) {
    if (h.order.size() != n || n < 3) return false;
    std::vector<char> seen(n, 0);
    for (Vertex v : h.order) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_edge(h.order[i], h.order[(i + 1) % n])) return false;
    }
    return true;
}

}  // namespace

bool verify_ham_cycle(const HamCycle& h, const Graph& g, const CycleCover& f,
                      std::span<const Vertex> exposed_preimage) {
    const std::size_t n = f.num_vertices();
    if (g.num_vertices() != n || exposed_preimage.size() != n) return false;
    return visits_all_once_along(h, n, [&](Vertex a, Vertex b) {
        if (f.has_edge(a, b)) return true;
        Vertex pa = exposed_preimage[static_cast<std::size_t>(a)];
        Vertex pb = exposed_preimage[static_cast<std::size_t>(b)];
        return pa != kNoVertex && pb != kNoVertex && g.has_edge(pa, pb);
    });
}

bool is_hamilton_cycle(const HamCycle& h, const Graph& g) {
    return visits_all_once_along(h, g.num_vertices(), [&](Vertex a, Vertex b) { return g.has_edge(a, b); });
}

}  // namespace hamfactor
