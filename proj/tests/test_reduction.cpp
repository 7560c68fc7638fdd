#include <doctest.h>

#include <algorithm>
#include <functional>

#include "hamfactor/generators.hpp"
#include "hamfactor/reduction.hpp"

using namespace hamfactor;

namespace {

Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

// Exhaustive search for a proper edge colouring with k colours.
bool colourable(const Graph& g, int k) {
    const auto edges = g.edges();
    std::vector<int> col(edges.size(), -1);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == edges.size()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                const bool share = edges[j].u == edges[i].u || edges[j].u == edges[i].v || edges[j].v == edges[i].u ||
                                   edges[j].v == edges[i].v;
                ok = !(share && col[j] == c);
            }
            if (!ok) continue;
            col[i] = c;
            if (rec(i + 1)) return true;
        }
        col[i] = -1;
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("Vizing colouring is proper with at most Delta + 1 colours") {
    SUBCASE("even cycle") {
        const Graph c6 = deterministic_family(GraphFamily::circulant, 6, 2);
        const EdgeColoring c = vizing_color(c6);
        CHECK(c.is_proper(c6));
        CHECK(c.num_colors <= 3);
    }
    SUBCASE("K4") {
        const Graph k4 = deterministic_family(GraphFamily::disjoint_cliques, 4, 3);
        const EdgeColoring c = vizing_color(k4);
        CHECK(c.is_proper(k4));
        CHECK(c.num_colors <= 4);
    }
    SUBCASE("Petersen needs exactly four") {
        const Graph p = petersen();
        CHECK_FALSE(colourable(p, 3));
        const EdgeColoring c = vizing_color(p);
        CHECK(c.is_proper(p));
        CHECK(c.num_colors == 4);
    }
    SUBCASE("random regular graphs") {
        Rng rng(3);
        for (std::size_t d : {3u, 4u, 5u, 6u})
            for (int t = 0; t < 5; ++t) {
                const Graph g = sample_regular(200, d, rng);
                const EdgeColoring c = vizing_color(g);
                CHECK(c.is_proper(g));
                CHECK(c.num_colors <= static_cast<int>(d) + 1);
            }
    }
}

TEST_CASE("extracting a spanning subgraph with degrees 2 and 3") {
    SUBCASE("d = 2 returns the input") {
        const Graph g = deterministic_family(GraphFamily::circulant, 12, 2);
        CHECK(extract_two_three(g, vizing_color(g)).edges() == g.edges());
    }
    SUBCASE("K4 with three classes is itself") {
        const Graph k4 = deterministic_family(GraphFamily::disjoint_cliques, 4, 3);
        const EdgeColoring c = vizing_color(k4);
        if (c.num_colors == 3) CHECK(extract_two_three(k4, c).edges() == k4.edges());
        const Graph h = extract_two_three(k4, c);
        CHECK(h.min_degree() >= 2);
        CHECK(h.max_degree() <= 3);
    }
    SUBCASE("circulant of degree 6") {
        const Graph g = deterministic_family(GraphFamily::circulant, 20, 6);
        const Graph h = extract_two_three(g, vizing_color(g));
        CHECK(h.min_degree() >= 2);
        CHECK(h.max_degree() <= 3);
        const auto he = h.edges();
        for (const Edge& e : he) CHECK(g.has_edge(e.u, e.v));
    }
    SUBCASE("random graphs keep the largest classes") {
        Rng rng(4);
        for (std::size_t d : {3u, 4u, 6u}) {
            const Graph g = sample_regular(300, d, rng);
            const EdgeColoring c = vizing_color(g);
            const Graph h = extract_two_three(g, c);
            CHECK(h.min_degree() >= 2);
            CHECK(h.max_degree() <= 3);
            auto sizes = c.class_sizes();
            std::sort(sizes.rbegin(), sizes.rend());
            CHECK(h.num_edges() == sizes[0] + sizes[1] + sizes[2]);
        }
    }
    SUBCASE("rejects non-regular input") {
        const Graph path(3, std::vector<Edge>{{0, 1}, {1, 2}});
        CHECK_THROWS_AS(extract_two_three(path, vizing_color(path)), std::invalid_argument);
    }
}
