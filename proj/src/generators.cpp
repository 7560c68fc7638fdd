#include "hamfactor/generators.hpp"

#include <algorithm>
#include <vector>

namespace hamfactor {

SamplerMode parse_sampler_mode(std::string_view name) {
    if (name == "pairing-uniform") return SamplerMode::pairing_uniform;
    if (name == "permutation-projected") return SamplerMode::permutation_projected;
    throw std::invalid_argument("unknown sampler mode '" + std::string(name) + "'");
}

std::string_view to_string(SamplerMode mode) {
    return mode == SamplerMode::pairing_uniform ? "pairing-uniform" : "permutation-projected";
}

GraphFamily parse_graph_family(std::string_view name) {
    if (name == "disjoint-cliques") return GraphFamily::disjoint_cliques;
    if (name == "circulant") return GraphFamily::circulant;
    if (name == "prism") return GraphFamily::prism;
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::string_view to_string(GraphFamily family) {
    switch (family) {
        case GraphFamily::disjoint_cliques: return "disjoint-cliques";
        case GraphFamily::circulant: return "circulant";
        case GraphFamily::prism: return "prism";
    }
    return "?";
}

Graph sample_regular(std::size_t n, std::size_t d, Rng& rng, std::size_t max_attempts, SamplerStats* stats) {
    if (n < 3 || d < 1 || d >= n || (n * d) % 2 != 0) {
        throw std::invalid_argument("sample_regular needs n >= 3, 1 <= d < n and n*d even (n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d) + ")");
    }
    const std::size_t points = n * d;
    std::vector<Vertex> pts(points);
    std::vector<std::vector<Vertex>> adj(n);
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        if (stats) stats->attempts = attempt;
        for (std::size_t i = 0; i < points; ++i) pts[i] = static_cast<Vertex>(i / d);
        for (auto& a : adj) a.clear();
        bool simple = true;
        // Lazy Fisher-Yates: pairing consecutive positions of a uniform
        // shuffle gives a uniform perfect matching of the points.
        for (std::size_t pos = 0; pos < points && simple; pos += 2) {
            std::swap(pts[pos], pts[pos + rng.below(points - pos)]);
            std::swap(pts[pos + 1], pts[pos + 1 + rng.below(points - pos - 1)]);
            Vertex a = pts[pos];
            Vertex b = pts[pos + 1];
            auto& la = adj[static_cast<std::size_t>(a)];
            if (a == b || std::find(la.begin(), la.end(), b) != la.end()) {
                simple = false;
                break;
            }
            la.push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        if (!simple) continue;
        std::vector<Edge> edges;
        edges.reserve(points / 2);
        for (std::size_t u = 0; u < n; ++u) {
            for (Vertex v : adj[u]) {
                if (static_cast<Vertex>(u) < v) edges.emplace_back(static_cast<Vertex>(u), v);
            }
        }
        return Graph(n, edges);
    }
    throw SamplerExhausted("pairing model found no simple " + std::to_string(d) + "-regular graph on " +
                           std::to_string(n) + " vertices in " + std::to_string(max_attempts) + " attempts");
}

namespace {

CycleCover sample_projected_permutation(std::size_t n, Rng& rng, std::size_t max_attempts, SamplerStats* stats) {
    std::vector<Vertex> perm(n);
    std::vector<char> seen(n);
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        if (stats) stats->attempts = attempt;
        for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
        rng.shuffle(std::span<Vertex>(perm));
        std::fill(seen.begin(), seen.end(), 0);
        bool ok = true;
        for (std::size_t s = 0; s < n && ok; ++s) {
            if (seen[s]) continue;
            std::size_t len = 0;
            for (Vertex v = static_cast<Vertex>(s); !seen[static_cast<std::size_t>(v)]; v = perm[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++len;
            }
            ok = len >= 3;
        }
        if (!ok) continue;
        std::vector<std::array<Vertex, 2>> nb(n);
        for (std::size_t v = 0; v < n; ++v) {
            nb[v][0] = perm[v];
            nb[static_cast<std::size_t>(perm[v])][1] = static_cast<Vertex>(v);
        }
        return cycle_decomposition(nb);
    }
    throw SamplerExhausted("no permutation without short cycles on " + std::to_string(n) + " points in " +
                           std::to_string(max_attempts) + " attempts");
}

}  // namespace

CycleCover sample_two_factor(std::size_t n, SamplerMode mode, Rng& rng, std::size_t max_attempts,
                             SamplerStats* stats) {
    if (n < 3) throw std::invalid_argument("a 2-factor needs n >= 3");
    if (mode == SamplerMode::pairing_uniform) {
        return cycle_decomposition(sample_regular(n, 2, rng, max_attempts, stats));
    }
    return sample_projected_permutation(n, rng, max_attempts, stats);
}

Graph deterministic_family(GraphFamily family, std::size_t n, std::size_t d) {
    std::vector<Edge> edges;
    auto fail = [&](const std::string& why) {
        return std::invalid_argument(std::string(to_string(family)) + " with n=" + std::to_string(n) +
                                     ", d=" + std::to_string(d) + ": " + why);
    };
    switch (family) {
        case GraphFamily::disjoint_cliques: {
            if (d < 1 || n % (d + 1) != 0) throw fail("requires (d+1) | n");
            for (std::size_t base = 0; base < n; base += d + 1) {
                for (std::size_t i = 0; i <= d; ++i) {
                    for (std::size_t j = i + 1; j <= d; ++j) {
                        edges.emplace_back(static_cast<Vertex>(base + i), static_cast<Vertex>(base + j));
                    }
                }
            }
            break;
        }
        case GraphFamily::circulant: {
            if (d < 1 || d >= n) throw fail("requires 1 <= d < n");
            if (d % 2 == 1 && n % 2 == 1) throw fail("odd d requires even n");
            for (std::size_t v = 0; v < n; ++v) {
                for (std::size_t s = 1; s <= d / 2; ++s) {
                    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + s) % n));
                }
                if (d % 2 == 1 && v < n / 2) {
                    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + n / 2));
                }
            }
            break;
        }
        case GraphFamily::prism: {
            if (d != 3 || n % 2 != 0 || n < 6) throw fail("requires d = 3 and even n >= 6");
            const std::size_t k = n / 2;
            for (std::size_t i = 0; i < k; ++i) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k));
                edges.emplace_back(static_cast<Vertex>(k + i), static_cast<Vertex>(k + (i + 1) % k));
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(k + i));
            }
            break;
        }
    }
    return Graph(n, edges);
}

}  // namespace hamfactor
