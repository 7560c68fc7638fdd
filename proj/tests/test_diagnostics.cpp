#include <doctest.h>

#include <cmath>

#include "hamfactor/diagnostics.hpp"

using namespace hamfactor;

TEST_CASE("branching process") {
    SUBCASE("p = 0 is deterministic") {
        BranchingParams bp;
        bp.t_max = 10;
        const auto traj = branching_trajectory_noloss(bp);
        const double s = std::pow(3.99, 10);
        CHECK(traj.back() == doctest::Approx(s));
        Rng a(1), b(2);
        CHECK(simulate_branching(bp, 100, s * 0.999999, a) == 1.0);
        CHECK(simulate_branching(bp, 100, s * 1.000001, b) == 0.0);
        Rng c(3), e(3);
        bp.p = 0.01;
        CHECK(simulate_branching(bp, 500, 1e5, c) == simulate_branching(bp, 500, 1e5, e));
    }
    SUBCASE("p = 1 always dies") {
        BranchingParams bp;
        bp.p = 1.0;
        Rng rng(3);
        CHECK(simulate_branching(bp, 1000, 1.0, rng) == 0.0);
    }
    SUBCASE("small p survives") {
        BranchingParams bp;
        bp.p = 0.001;
        Rng rng(4);
        CHECK(simulate_branching(bp, 10000, std::pow(3.9, 10), rng) >= 0.99);
    }
    SUBCASE("parameter checks") {
        BranchingParams bp;
        bp.growth = 1.0;
        CHECK_THROWS_AS(bp.validate(), std::invalid_argument);
        bp.growth = 3.99;
        bp.p = 1.5;
        CHECK_THROWS_AS(bp.validate(), std::invalid_argument);
    }
}

TEST_CASE("matching embedding probability") {
    Rng rng(5);
    CHECK(matching_embed_probability(100, 3, 0, 10, rng) == 1.0);
    const double exact = 3.0 / 99.0;
    const double p4 = matching_embed_probability(100, 3, 1, 10000, rng);
    const double p6 = matching_embed_probability(100, 3, 1, 1000000, rng);
    CHECK(p6 == doctest::Approx(exact).epsilon(0.1));
    // Standard error shrinks like 1/sqrt(trials): allow 5 sigma at each size.
    const double sigma4 = std::sqrt(exact * (1 - exact) / 1e4), sigma6 = std::sqrt(exact * (1 - exact) / 1e6);
    CHECK(std::abs(p4 - exact) < 5 * sigma4);
    CHECK(std::abs(p6 - exact) < 5 * sigma6);
    CHECK_THROWS_AS(matching_embed_probability(10, 3, 6, 10, rng), std::invalid_argument);
}

TEST_CASE("cycle statistics of random 2-factors") {
    Rng rng(6);
    SUBCASE("n = 3 has one cycle") {
        CHECK(cycle_count_stats(SamplerMode::pairing_uniform, 3, 100, {}, rng).mean_cycles == 1.0);
    }
    SUBCASE("n = 10^4, both modes") {
        const double ln = std::log(1e4);
        const auto perm = cycle_count_stats(SamplerMode::permutation_projected, 10000, 300, {10, 100, 1000}, rng);
        CHECK(perm.mean_cycles >= 0.75 * ln);
        CHECK(perm.mean_cycles <= 1.15 * ln);
        const auto pair = cycle_count_stats(SamplerMode::pairing_uniform, 10000, 300, {}, rng);
        CHECK(pair.mean_cycles >= 0.35 * ln);
        CHECK(pair.mean_cycles <= 0.7 * ln);
        // Short-cycle counts grow by about ln 10 per decade of t.
        const double d1 = perm.mean_short[1].second - perm.mean_short[0].second;
        const double d2 = perm.mean_short[2].second - perm.mean_short[1].second;
        for (double d : {d1, d2}) {
            CHECK(d >= std::log(10.0) / 2);
            CHECK(d <= std::log(10.0) * 2);
        }
    }
}

TEST_CASE("first-moment bound") {
    CHECK(first_moment_value(10000, 2, 10) == doctest::Approx(14.8).epsilon(0.01));
    CHECK(first_moment_value(10000, 3, 10) > first_moment_value(10000, 2, 10));
    std::vector<Vertex> succ(100);
    for (std::size_t i = 0; i < 100; ++i) succ[i] = static_cast<Vertex>((i + 1) % 100);
    const CycleCover one = CycleCover::from_successors(succ);
    const MomentBound b = first_moment_bound(100, 3, one);
    CHECK(b.m == 1);
    CHECK(b.value == doctest::Approx(std::pow(100.0, -0.02) * 2.0));
    CHECK(first_moment_bound(100, 3, one, 1.0).m == 11);
    CHECK_THROWS_AS(first_moment_bound(100, 3, one, 0.1), std::invalid_argument);
}
