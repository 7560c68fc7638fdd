// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <thread>

#include "brute_force.hpp"
#include "hamfactor/diagnostics.hpp"
#include "hamfactor/generators.hpp"
#include "hamfactor/harness.hpp"
#include "hamfactor/near_two_factor.hpp"
#include "hamfactor/oracle.hpp"
#include "hamfactor/path_state.hpp"
#include "hamfactor/phase2.hpp"

using namespace hamfactor;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

Verdict sampler_exactness() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(101);
    std::string detail;
    bool pass = true;
    for (std::size_t n : {5u, 6u}) {
        const auto all = enumerate_two_factors(n);
        std::vector<std::uint64_t> counts(all.size(), 0);
        for (int s = 0; s < 100000; ++s) {
            const CycleCover c = canonical_form(sample_two_factor(n, SamplerMode::pairing_uniform, rng));
            const auto it = std::find(all.begin(), all.end(), c);
            if (it == all.end()) return {false, "sample outside the enumeration"};
            ++counts[static_cast<std::size_t>(it - all.begin())];
        }
        const ChiSquare cs = chi_square_uniformity(counts, all.size());
        pass = pass && cs.p_value > 0.001;
        char buf[96];
        std::snprintf(buf, sizeof buf, "n=%zu outcomes=%zu p=%.4f; ", n, all.size(), cs.p_value);
        detail += buf;
    }
    const double secs = seconds_since(t0);
    pass = pass && secs < 30.0;
    return {pass, detail + "time " + std::to_string(secs) + " s"};
}

Verdict rotation_soundness() {
    Rng rng(202);
    std::size_t violations = 0, steps = 0;
    for (int seq = 0; seq < 10000; ++seq) {
        const std::size_t n = 6 + rng.below(60);
        const CycleCover f = sample_two_factor(n, SamplerMode::pairing_uniform, rng);
        const auto u0 = static_cast<Vertex>(rng.below(n));
        const Vertex v0 = f.succ(u0);
        const NearTwoFactor start = delete_edge(f, u0, v0);
        const RoundBase base(f, u0, v0);
        NearTwoFactor l = start;
        PathState st = PathState::root(base);
        std::vector<RotationRecord> history;
        for (int k = 0; k < 30; ++k) {
            const auto w = static_cast<Vertex>(rng.below(n));
            const Vertex x = l.neighbors(w)[rng.below(2)];
            const RotationRecord r{l.free_end(), w, x};
            if (x == kNoVertex || !l.can_rotate(r)) continue;
            l.apply(r);
            st = st.rotated(base, r);
            history.push_back(r);
            ++steps;
            if (!l.check_invariants()) ++violations;
            if (l.free_end() != st.free_end() || l.path() != st.path_vertices(base)) ++violations;
        }
        NearTwoFactor replay = start;
        for (const auto& r : history) replay = rotate(replay, r);
        if (!(replay == l)) ++violations;
        // Degree sequence: two ends of degree 1 (or a 1-vertex path is excluded), others 2.
        std::size_t deg1 = 0;
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
            const auto& nb = l.neighbors(v);
            const int d = (nb[0] != kNoVertex) + (nb[1] != kNoVertex);
            if (d == 1) ++deg1;
            else if (d != 2) ++violations;
        }
        if (deg1 != 2) ++violations;
    }
    return {violations == 0, "10000 sequences, " + std::to_string(steps) + " rotations, " + std::to_string(violations) +
                                 " violations"};
}

struct Batch {
    std::string label;
    std::size_t n = 0;
    ExperimentReport report;
};

std::vector<Batch> run_end_to_end() {
    std::vector<Batch> out;
    for (std::size_t n : {2000u, 5000u})
        for (std::size_t d : {2u, 3u})
            for (const char* graph : {"random", "disjoint-cliques"}) {
                ExperimentConfig c;
                // Disjoint K_{d+1} needs (d+1) | n: round down to a multiple.
                c.n = std::string(graph) == "random" ? n : n - n % (d + 1);
                c.d = d;
                c.graph = graph;
                c.trials = 100;
                c.seed = 7000 + n + 10 * d + (std::string(graph) == "random" ? 0 : 1);
                c.workers = workers();
                Batch b;
                b.label = std::string(graph) + " n=" + std::to_string(c.n) + " d=" + std::to_string(d);
                b.n = n;
                b.report = run_experiment(c);
                out.push_back(std::move(b));
            }
    return out;
}

Verdict monotone_elimination(const std::vector<Batch>& batches) {
    std::size_t runs = 0, violations = 0;
    for (const auto& b : batches)
        for (const auto& r : b.report.rows) {
            if (!r.phase1_success) continue;
            ++runs;
            violations += r.monotone_violations;
        }
    return {violations == 0 && runs > 0,
            std::to_string(runs) + " successful phase I runs, " + std::to_string(violations) + " violations"};
}

Verdict end_to_end(const std::vector<Batch>& batches) {
    bool pass = true;
    std::string detail;
    for (const auto& b : batches) {
        const bool ok = b.report.success_rate >= 0.95 && b.report.max_ms <= 10000.0;
        pass = pass && ok;
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s: %zu/100 max %.0f ms; ", b.label.c_str(), b.report.successes, b.report.max_ms);
        detail += buf;
    }
    return {pass, detail};
}

Verdict exposure_budget(const std::vector<Batch>& batches) {
    std::vector<double> fractions, ratio2000, ratio5000;
    for (const auto& b : batches)
        for (const auto& r : b.report.rows) {
            if (r.outcome != TrialOutcome::success) continue;
            fractions.push_back(static_cast<double>(r.exposures) / static_cast<double>(r.cycle.order.size()));
            (b.n == 2000 ? ratio2000 : ratio5000).push_back(r.exposure_ratio);
        }
    if (fractions.empty() || ratio2000.empty() || ratio5000.empty()) return {false, "no successful trials to measure"};
    const double mf = median(fractions), r2 = median(ratio2000), r5 = median(ratio5000);
    char buf[160];
    std::snprintf(buf, sizeof buf, "median exposed fraction %.4f (<= 0.10), median ratio n=5000 %.3f vs n=2000 %.3f (<= 2x)",
                  mf, r5, r2);
    return {mf <= 0.10 && r5 <= 2.0 * r2, buf};
}

Verdict oracle_equivalence() {
    Rng rng(606);
    std::size_t disagreements = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 3 + rng.below(8);
        const double p = 0.25 + 0.5 * rng.uniform();
        std::vector<Edge> e;
        for (Vertex i = 0; i < static_cast<Vertex>(n); ++i)
            for (Vertex j = i + 1; j < static_cast<Vertex>(n); ++j)
                if (rng.uniform() < p) e.emplace_back(i, j);
        const Graph g(n, e);
        const auto h = held_karp(g);
        if (h.has_value() != brute::hamiltonian(g) || (h && !is_hamilton_cycle(*h, g))) ++disagreements;
    }
    std::vector<Edge> pe;
    for (Vertex i = 0; i < 5; ++i) {
        pe.emplace_back(i, (i + 1) % 5);
        pe.emplace_back(i, i + 5);
        pe.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    const bool petersen_none = !held_karp(Graph(10, pe)).has_value();
    return {disagreements == 0 && petersen_none, std::to_string(disagreements) + " disagreements on 500 graphs; Petersen " +
                                                     (petersen_none ? "non-Hamiltonian" : "reported Hamiltonian")};
}

Verdict dp_exactness() {
    Rng rng(707);
    std::size_t disagreements = 0;
    for (std::size_t m = 3; m <= 8; ++m)
        for (int t = 0; t < 1000; ++t) {
            ArcMatrix a(m, std::vector<char>(m, 0));
            const double p = 0.2 + 0.6 * rng.uniform();
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    if (i != j) a[i][j] = rng.uniform() < p;
            const auto rho = find_cyclic_join(a);
            bool valid = true;
            if (rho) {
                valid = is_single_cycle(*rho);
                for (std::size_t i = 0; i < m && valid; ++i) valid = a[i][static_cast<std::size_t>((*rho)[i])] != 0;
            }
            if (!valid || rho.has_value() != brute::has_cyclic_join(a)) ++disagreements;
        }
    std::size_t out_of_bounds = 0, plans = 0;
    auto fact = [](std::size_t k) {
        std::size_t f = 1;
        for (std::size_t i = 2; i <= k; ++i) f *= i;
        return f;
    };
    while (plans < 100) {
        const std::size_t k = 1 + rng.below(3);
        std::vector<Vertex> succ;
        Vertex start = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t len = 30 + rng.below(50);
            for (std::size_t i = 0; i < len; ++i) succ.push_back(start + static_cast<Vertex>((i + 1) % len));
            start += static_cast<Vertex>(len);
        }
        const CycleCover cover = CycleCover::from_successors(succ);
        const ExposureOracle o = ExposureOracle::sample(cover.num_vertices(), Rng(rng()), 1000);
        Phase2Params p;
        p.a = 0.3 + 0.9 * rng.uniform();
        p.m_max = 7;
        const JoinPlan plan = choose_cut_set(cover, o, p, rng);
        const std::size_t m = plan.m();
        if (m < 2) continue;
        std::size_t count = 0;
        for (const auto& rho : brute::cyclic_permutations(static_cast<int>(m))) count += is_in_R_M(plan.phi, rho);
        if (count < fact(m - 2) || count > fact(m - 1)) ++out_of_bounds;
        ++plans;
    }
    return {disagreements == 0 && out_of_bounds == 0,
            std::to_string(disagreements) + " DP disagreements over 6000 matrices; " + std::to_string(out_of_bounds) +
                " of 100 plans outside [(m-2)!, (m-1)!]"};
}

Verdict embedding_numerics() {
    Rng rng(808);
    const double p1 = matching_embed_probability(100, 3, 1, 1000000, rng);
    const double p2 = matching_embed_probability(100, 3, 2, 10000000, rng);
    const double e1 = 3.0 / 99.0, e2 = 9e-4;
    const double r1 = std::abs(p1 - e1) / e1, r2 = std::abs(p2 - e2) / e2;
    char buf[160];
    std::snprintf(buf, sizeof buf, "m=1: %.5f vs %.5f (%.1f%%); m=2: %.6f vs %.6f (%.1f%%)", p1, e1, 100 * r1, p2, e2, 100 * r2);
    return {r1 <= 0.10 && r2 <= 0.15, buf};
}

Verdict branching_numerics() {
    Rng rng(909);
    BranchingParams bp;
    bp.p = 0.001;
    bp.t_max = 10;
    const double s = simulate_branching(bp, 10000, std::pow(3.9, 10), rng);
    bp.p = 1.0;
    const double dead = simulate_branching(bp, 10000, 1.0, rng);
    return {s >= 0.99 && dead == 0.0, "p=0.001 survival " + std::to_string(s) + "; p=1 survival " + std::to_string(dead)};
}

Verdict cycle_statistics() {
    Rng rng(1010);
    const double ln = std::log(1e4);
    const CycleCountStats st = cycle_count_stats(SamplerMode::permutation_projected, 10000, 1000, {10, 100, 1000}, rng);
    const double lo = 0.75 * ln, hi = 1.15 * ln;
    const double d1 = st.mean_short[1].second - st.mean_short[0].second;
    const double d2 = st.mean_short[2].second - st.mean_short[1].second;
    const double l10 = std::log(10.0);
    const bool log_scaling = d1 >= l10 / 2 && d1 <= 2 * l10 && d2 >= l10 / 2 && d2 <= 2 * l10;
    char buf[200];
    std::snprintf(buf, sizeof buf, "mean cycles %.3f in [%.3f, %.3f]; increments per decade of t %.3f, %.3f vs ln 10 = %.3f",
                  st.mean_cycles, lo, hi, d1, d2, l10);
    return {st.mean_cycles >= lo && st.mean_cycles <= hi && log_scaling, buf};
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int id, const Verdict& v) {
        std::printf("criterion %d: %s  %s\n", id, v.pass ? "PASS" : "FAIL", v.detail.c_str());
        std::fflush(stdout);
        if (!v.pass) ++failed;
    };
    report(1, sampler_exactness());
    report(2, rotation_soundness());
    const auto batches = run_end_to_end();
    report(3, monotone_elimination(batches));
    report(4, end_to_end(batches));
    report(5, exposure_budget(batches));
    report(6, oracle_equivalence());
    report(7, dp_exactness());
    report(8, embedding_numerics());
    report(9, branching_numerics());
    report(10, cycle_statistics());
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
