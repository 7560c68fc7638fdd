#include <doctest.h>

#include <algorithm>

#include "hamfactor/generators.hpp"
#include "hamfactor/path_state.hpp"

using namespace hamfactor;

namespace {

std::vector<std::vector<Vertex>> sorted_sets(std::vector<std::vector<Vertex>> cs) {
    for (auto& c : cs) std::sort(c.begin(), c.end());
    std::sort(cs.begin(), cs.end());
    return cs;
}

// All cycles of the state, base cycles that were never absorbed included.
std::vector<std::vector<Vertex>> all_cycles(const RoundBase& base, const PathState& s) {
    auto cs = s.new_cycle_vertices(base);
    const auto& ab = s.absorbed_components();
    for (int c = 1; c < static_cast<int>(base.num_components()); ++c)
        if (std::find(ab.begin(), ab.end(), c) == ab.end()) cs.push_back(base.component(c));
    return sorted_sets(cs);
}

}  // namespace

TEST_CASE("root state mirrors the deleted-edge near-2-factor") {
    auto cover = CycleCover::from_successors({1, 2, 0, 4, 5, 6, 3});
    RoundBase base(cover, 0, 1);
    auto s = PathState::root(base);
    CHECK(s.fixed_end() == 0);
    CHECK(s.free_end() == 1);
    CHECK(s.path_vertices(base) == base.near().path());
    CHECK(s.num_cycles(base) == 1);
}

TEST_CASE("three rotation kinds on a small example") {
    // path 0-1-2-3-4-5 after deleting {5,0} from the 6-cycle; separate cycle 6-7-8
    auto cover = CycleCover::from_successors({1, 2, 3, 4, 5, 0, 7, 8, 6});
    RoundBase base(cover, 0, 5);
    auto s = PathState::root(base);
    REQUIRE(s.path_vertices(base) == std::vector<Vertex>{0, 1, 2, 3, 4, 5});

    auto absorb = s.classify(base, {5, 7, 8});
    CHECK(absorb.kind == RotationKind::absorb);
    CHECK(absorb.path_size == 9);
    auto a = s.rotated(base, {5, 7, 8});
    CHECK(a.path_vertices(base) == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 7, 6, 8});

    auto pivot = s.rotated(base, {5, 2, 3});
    CHECK(pivot.path_vertices(base) == std::vector<Vertex>{0, 1, 2, 5, 4, 3});

    auto split = s.classify(base, {5, 2, 1});
    CHECK(split.kind == RotationKind::split);
    CHECK(split.path_size == 2);
    CHECK(split.new_cycle_size == 4);
    CHECK_FALSE(is_acceptable(split, 6, 4));  // long path would become short
    CHECK(is_acceptable(split, 6, 3) == false);
    CHECK(is_acceptable(split, 3, 4));        // path was already short
    CHECK_FALSE(is_acceptable(split, 3, 5));  // new cycle too short

    CHECK(s.classify(base, {5, 4, 3}).kind == RotationKind::invalid);  // already adjacent
    CHECK(s.classify(base, {5, 1, 0}).kind == RotationKind::invalid);  // one-vertex path
    CHECK(s.classify(base, {5, 2, 4}).kind == RotationKind::invalid);  // {2,4} not an edge
    CHECK(s.classify(base, {4, 2, 3}).kind == RotationKind::invalid);  // not the free end
}

TEST_CASE("random rotation walks agree with explicit near-2-factors") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Rng rng(seed);
        const std::size_t n = 12 + rng.below(40);
        auto cover = sample_two_factor(n, SamplerMode::pairing_uniform, rng);
        const Vertex u0 = static_cast<Vertex>(rng.below(n));
        RoundBase base(cover, u0, cover.succ(u0));
        auto s = PathState::root(base);
        NearTwoFactor near = base.near();
        for (int step = 0; step < 200; ++step) {
            if (rng.below(10) == 0) {
                s = s.reversed(base);
                near.swap_ends();
            }
            const Vertex w = static_cast<Vertex>(rng.below(n));
            const auto nb = near.neighbors(w);
            const Vertex x = nb[rng.below(nb[1] == kNoVertex ? 1 : 2)];
            const RotationRecord r{near.free_end(), w, x};
            const auto effect = s.classify(base, r);
            REQUIRE((effect.kind != RotationKind::invalid) == near.can_rotate(r));
            if (effect.kind == RotationKind::invalid) continue;
            const std::size_t before = near.path_size();
            s = s.rotated(base, r);
            near.apply(r);
            REQUIRE(s.path_vertices(base) == near.path());
            REQUIRE(s.path_size() == near.path_size());
            REQUIRE(all_cycles(base, s) == sorted_sets(near.cycles()));
            REQUIRE(s.num_cycles(base) == near.cycles().size());
            if (effect.kind == RotationKind::split) {
                REQUIRE(effect.path_size + effect.new_cycle_size == before);
            }
        }
    }
}
