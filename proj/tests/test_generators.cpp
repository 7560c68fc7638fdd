#include <doctest.h>

#include <cmath>
#include <map>

#include "brute_force.hpp"
#include "hamfactor/generators.hpp"
#include "hamfactor/oracle.hpp"

using namespace hamfactor;

TEST_CASE("random regular graphs on tiny vertex sets") {
    Rng rng(1);
    SUBCASE("n=4, d=3 is always K4") {
        for (int i = 0; i < 50; ++i) CHECK(sample_regular(4, 3, rng).num_edges() == 6);
    }
    SUBCASE("n=5, d=2 is always a five-cycle") {
        for (int i = 0; i < 50; ++i) CHECK(cycle_decomposition(sample_regular(5, 2, rng)).num_cycles() == 1);
    }
    SUBCASE("n=6, d=2 splits 60:10 between hexagons and triangle pairs") {
        std::map<std::vector<Edge>, std::uint64_t> seen;
        for (int i = 0; i < 100000; ++i) ++seen[sample_regular(6, 2, rng).edges()];
        CHECK(seen.size() == 70);
        std::vector<std::uint64_t> counts;
        std::uint64_t hexagons = 0;
        for (const auto& [edges, c] : seen) {
            counts.push_back(c);
            if (cycle_decomposition(Graph(6, edges)).num_cycles() == 1) hexagons += c;
        }
        CHECK(chi_square_uniformity(counts, 70).p_value > 0.001);
        CHECK(static_cast<double>(hexagons) / 100000.0 == doctest::Approx(60.0 / 70.0).epsilon(0.01));
    }
    SUBCASE("parity and range errors") {
        CHECK_THROWS_AS(sample_regular(5, 3, rng), std::invalid_argument);
        CHECK_THROWS_AS(sample_regular(4, 4, rng), std::invalid_argument);
    }
    SUBCASE("rejection cap surfaces as an error") {
        CHECK_THROWS_AS(sample_regular(200, 7, rng, 1), SamplerExhausted);
    }
}

TEST_CASE("random 2-factors") {
    Rng rng(2);
    SUBCASE("n=3 gives the triangle in both modes") {
        CHECK(sample_two_factor(3, SamplerMode::pairing_uniform, rng).num_cycles() == 1);
        CHECK(sample_two_factor(3, SamplerMode::permutation_projected, rng).num_cycles() == 1);
    }
    for (std::size_t n : {5u, 6u}) {
        SUBCASE("pairing-uniform is uniform over all 2-factors") {
            const auto all = enumerate_two_factors(n);
            std::map<std::vector<Vertex>, std::size_t> index;
            for (std::size_t i = 0; i < all.size(); ++i) {
                std::vector<Vertex> key;
                for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) key.push_back(all[i].succ(v));
                index[key] = i;
            }
            std::vector<std::uint64_t> counts(all.size(), 0);
            for (int s = 0; s < 100000; ++s) {
                const CycleCover c = canonical_form(sample_two_factor(n, SamplerMode::pairing_uniform, rng));
                std::vector<Vertex> key;
                for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) key.push_back(c.succ(v));
                REQUIRE(index.count(key) == 1);
                ++counts[index[key]];
            }
            CHECK(chi_square_uniformity(counts, all.size()).p_value > 0.001);
        }
    }
    SUBCASE("permutation-projected never has a cycle below 3") {
        for (int s = 0; s < 200; ++s)
            CHECK(sample_two_factor(50, SamplerMode::permutation_projected, rng).min_cycle_length() >= 3);
    }
    SUBCASE("pairing acceptance rate for d = 2 is near exp(-3/4)") {
        std::size_t attempts = 0;
        const int samples = 2000;
        for (int s = 0; s < samples; ++s) {
            SamplerStats st;
            sample_two_factor(10000, SamplerMode::pairing_uniform, rng, kDefaultMaxAttempts, &st);
            attempts += st.attempts;
        }
        CHECK(static_cast<double>(samples) / static_cast<double>(attempts) == doctest::Approx(std::exp(-0.75)).epsilon(0.1));
    }
    SUBCASE("same seed, same output") {
        Rng a(77), b(77);
        CHECK(sample_two_factor(500, SamplerMode::pairing_uniform, a) == sample_two_factor(500, SamplerMode::pairing_uniform, b));
        CHECK(sample_regular(500, 3, a).edges() == sample_regular(500, 3, b).edges());
    }
}

TEST_CASE("deterministic families") {
    const Graph cliques = deterministic_family(GraphFamily::disjoint_cliques, 9, 2);
    CHECK(cliques.is_regular(2));
    CHECK(cycle_decomposition(cliques).cycle_lengths() == std::vector<std::size_t>{3, 3, 3});

    const Graph circ = deterministic_family(GraphFamily::circulant, 10, 4);
    CHECK(circ.is_regular(4));
    CHECK(circ.has_edge(0, 2));
    CHECK(circ.has_edge(0, 8));
    CHECK_FALSE(circ.has_edge(0, 3));

    const Graph prism = deterministic_family(GraphFamily::prism, 10, 3);
    CHECK(prism.is_regular(3));
    CHECK(prism.num_edges() == 15);

    CHECK_THROWS_AS(deterministic_family(GraphFamily::disjoint_cliques, 10, 2), std::invalid_argument);
}

TEST_CASE("2-factor counts agree with the cycle-type formula") {
    for (int n = 3; n <= 9; ++n) CHECK(static_cast<double>(enumerate_two_factors(static_cast<std::size_t>(n)).size()) == doctest::Approx(brute::two_factor_count(n)));
}
