#include "hamfactor/phase2.hpp"

#include <algorithm>
#include <cmath>

namespace hamfactor {

std::size_t cut_count(std::size_t cycle_length, double a) {
    return 2 * static_cast<std::size_t>(std::floor(static_cast<double>(cycle_length) / (20.0 * a))) + 1;
}

nlohmann::json JoinPlan::to_json() const {
    nlohmann::json cuts = nlohmann::json::array();
    for (std::size_t j = 0; j < m(); ++j) cuts.push_back({u[j], v[j]});
    return {{"a", a}, {"m", m()}, {"cuts_per_cycle", cuts_per_cycle}, {"cuts", cuts}, {"phi", phi}};
}

JoinPlan choose_cut_set(const CycleCover& cover, const ExposureOracle& oracle, const Phase2Params& params, Rng& rng) {
    const std::size_t n = cover.num_vertices();
    const std::size_t k = cover.num_cycles();
    if (k > params.m_max) throw PlanError("more cycles than the largest plan size");
    JoinPlan plan;
    plan.a = params.a > 0.0 ? params.a : static_cast<double>(n) / std::log(static_cast<double>(n));
    while (true) {
        plan.cuts_per_cycle.clear();
        std::size_t m = 0;
        for (int c = 0; c < static_cast<int>(k); ++c) {
            plan.cuts_per_cycle.push_back(cut_count(cover.cycle_length(c), plan.a));
            m += plan.cuts_per_cycle.back();
        }
        if (m <= params.m_max) break;
        plan.a *= 1.25;
    }

    for (int c = 0; c < static_cast<int>(k); ++c) {
        const auto cyc = cover.cycle_vertices(c);
        const std::size_t len = cyc.size();
        const std::size_t mi = plan.cuts_per_cycle[static_cast<std::size_t>(c)];
        std::vector<std::size_t> valid;
        for (std::size_t p = 0; p < len; ++p) {
            if (!oracle.is_exposed_f(cyc[p]) && !oracle.is_exposed_f(cyc[(p + len - 1) % len])) valid.push_back(p);
        }
        if (valid.size() < mi) throw PlanError("not enough unexposed cut positions on cycle " + std::to_string(c));
        std::vector<std::size_t> pick;
        bool spaced = false;
        for (std::size_t attempt = 0; attempt < params.cut_attempts && !spaced; ++attempt) {
            // uniform mi-subset by partial shuffle
            std::vector<std::size_t> pool = valid;
            for (std::size_t i = 0; i < mi; ++i) {
                const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
                std::swap(pool[i], pool[j]);
            }
            pick.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(mi));
            std::sort(pick.begin(), pick.end());
            spaced = true;
            for (std::size_t i = 0; i + 1 < mi && spaced; ++i) spaced = pick[i + 1] - pick[i] >= 3;
            if (mi > 1 && spaced) spaced = pick.front() + len - pick.back() >= 3;
        }
        if (!spaced) throw PlanError("could not space the cuts on cycle " + std::to_string(c));
        const int first = static_cast<int>(plan.u.size());
        for (std::size_t i = 0; i < mi; ++i) {
            const std::size_t p = pick[i];
            plan.u.push_back(cyc[(p + len - 1) % len]);
            plan.v.push_back(cyc[p]);
            plan.phi.push_back(first + static_cast<int>((i + 1) % mi));
            std::vector<Vertex> seg;
            const std::size_t end = pick[(i + 1) % mi];  // exclusive: next cut vertex
            std::size_t q = p;
            do {
                seg.push_back(cyc[q]);
                q = (q + 1) % len;
            } while (q != end);
            plan.segments.push_back(std::move(seg));
        }
    }
    return plan;
}

ArcMatrix build_connector(const JoinPlan& plan, ExposureOracle& oracle, const Graph& g23) {
    const std::size_t m = plan.m();
    for (std::size_t j = 0; j < m; ++j) {
        if (oracle.is_exposed_f(plan.u[j]) || oracle.is_exposed_f(plan.v[j]))
            throw std::logic_error("build_connector: cut endpoint already exposed");
    }
    std::vector<Vertex> vg(m), ug(m);
    for (std::size_t j = 0; j < m; ++j) {
        vg[j] = oracle.expose_preimage(plan.v[j]);
        ug[j] = oracle.expose_preimage(plan.u[j]);
    }
    ArcMatrix arcs(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) arcs[i][j] = g23.has_edge(vg[i], ug[static_cast<std::size_t>(plan.phi[j])]) ? 1 : 0;
    return arcs;
}

std::optional<std::vector<int>> find_cyclic_join(const ArcMatrix& arcs) {
    const std::size_t m = arcs.size();
    if (m == 0 || m > 24) throw std::invalid_argument("find_cyclic_join: unsupported size");
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    // reach[mask]: endpoints j of paths from 0 through exactly the vertices of mask
    std::vector<std::uint32_t> reach(std::size_t{1} << m, 0);
    reach[1] = 1;
    for (std::uint32_t mask = 1; mask <= full; mask += 2) {
        const std::uint32_t ends = reach[mask];
        if (!ends) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (!(ends >> j & 1)) continue;
            for (std::size_t k = 1; k < m; ++k)
                if (!(mask >> k & 1) && arcs[j][k]) reach[mask | (std::uint32_t{1} << k)] |= std::uint32_t{1} << k;
        }
    }
    int last = -1;
    for (std::size_t j = 0; j < m && last < 0; ++j)
        if ((reach[full] >> j & 1) && arcs[j][0]) last = static_cast<int>(j);
    if (last < 0) return std::nullopt;
    std::vector<int> rho(m, -1);
    rho[static_cast<std::size_t>(last)] = 0;
    std::uint32_t mask = full;
    int cur = last;
    while (cur != 0) {
        const std::uint32_t prev = mask ^ (std::uint32_t{1} << cur);
        int p = -1;
        for (std::size_t j = 0; j < m && p < 0; ++j)
            if ((reach[prev] >> j & 1) && arcs[j][static_cast<std::size_t>(cur)]) p = static_cast<int>(j);
        rho[static_cast<std::size_t>(p)] = cur;
        mask = prev;
        cur = p;
    }
    return rho;
}

bool is_single_cycle(const std::vector<int>& perm) {
    const std::size_t m = perm.size();
    if (m == 0) return false;
    std::vector<char> seen(m, 0);
    std::size_t len = 0;
    int cur = 0;
    while (!seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = 1;
        ++len;
        cur = perm[static_cast<std::size_t>(cur)];
        if (cur < 0 || static_cast<std::size_t>(cur) >= m) return false;
    }
    return cur == 0 && len == m;
}

int permutation_sign(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t c = i; !seen[c]; c = static_cast<std::size_t>(perm[c])) {
            seen[c] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

bool is_in_R_M(const std::vector<int>& phi, const std::vector<int>& rho) {
    std::vector<int> lambda(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) lambda[i] = phi[static_cast<std::size_t>(rho[i])];
    return is_single_cycle(lambda);
}

HamCycle assemble_hamilton(const JoinPlan& plan, const std::vector<int>& rho) {
    if (rho.size() != plan.m() || !is_single_cycle(rho)) throw std::logic_error("assemble_hamilton: rho is not cyclic");
    HamCycle h;
    int i = 0;
    do {
        const auto& seg = plan.segments[static_cast<std::size_t>(i)];
        h.order.insert(h.order.end(), seg.rbegin(), seg.rend());
        i = rho[static_cast<std::size_t>(i)];
    } while (i != 0);
    return h;
}

Phase2Result run_phase2(const CycleCover& input, ExposureOracle& oracle, const Graph& g23, const Phase2Params& params,
                        Rng& rng, const TraceSink& trace) {
    Phase2Result res;
    const std::size_t exposed_before = oracle.exposed_count();
    auto finish = [&](bool ok, std::string why) {
        res.success = ok;
        res.failure = std::move(why);
        res.exposures = oracle.exposed_count() - exposed_before;
        return res;
    };
    CycleCover cover = input;
    if (cover.num_cycles() == 1) {
        res.cycle.order = cover.cycle_vertices(0);
        return finish(true, "");
    }

    for (std::size_t attempt = 0; attempt < params.plan_retries; ++attempt) {
        JoinPlan plan;
        try {
            plan = choose_cut_set(cover, oracle, params, rng);
        } catch (const PlanError& e) {
            if (trace) trace({{"event", "phase2-plan-error"}, {"what", e.what()}});
            break;
        }
        ++res.plan_attempts;
        const ArcMatrix arcs = build_connector(plan, oracle, g23);
        const auto rho = find_cyclic_join(arcs);
        if (trace) {
            auto j = plan.to_json();
            j["event"] = "phase2-plan";
            j["arcs"] = arcs;
            j["rho"] = rho ? nlohmann::json(*rho) : nlohmann::json(nullptr);
            trace(j);
        }
        if (rho) {
            res.cycle = assemble_hamilton(plan, *rho);
            return finish(true, "");
        }
    }

    while (cover.num_cycles() > 1) {
        if (res.merge_failures > params.merge_retry_budget) return finish(false, "merge retry budget exhausted");
        // start on the shortest cycle, at a random edge with both ends hidden
        std::vector<int> order(cover.num_cycles());
        for (std::size_t c = 0; c < order.size(); ++c) order[c] = static_cast<int>(c);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return cover.cycle_length(x) < cover.cycle_length(y); });
        std::vector<std::pair<Vertex, Vertex>> options;
        for (int c : order) {
            for (Vertex a : cover.cycle_vertices(c)) {
                const Vertex b = cover.succ(a);
                if (!oracle.is_exposed_f(a) && !oracle.is_exposed_f(b)) {
                    options.emplace_back(a, b);
                    options.emplace_back(b, a);
                }
            }
            if (!options.empty()) break;
        }
        if (options.empty()) return finish(false, "no unexposed cover edge to start a merge round");
        const auto [u0, v0] = options[static_cast<std::size_t>(rng.below(options.size()))];

        if (params.merge.round_exposure_cap > 0) oracle.set_cap(oracle.exposed_count() + params.merge.round_exposure_cap);
        RoundOutcome round;
        try {
            round = run_round(cover, u0, v0, RoundMode::merge, {}, oracle, g23, params.merge);
        } catch (...) {
            oracle.clear_cap();
            throw;
        }
        oracle.clear_cap();
        round.stats.attempt = res.merge_failures;
        res.rounds.push_back(round.stats);
        if (trace) {
            auto j = round.stats.to_json();
            j["event"] = "phase2-merge";
            trace(j);
        }
        if (round.stats.status != StepStatus::success) {
            ++res.merge_failures;
            continue;
        }
        if (round.cover.num_cycles() >= cover.num_cycles())
            throw std::logic_error("run_phase2: merge round did not reduce the number of cycles");
        cover = std::move(round.cover);
        ++res.merge_rounds;
        res.rotations += round.stats.rotations;
    }
    res.cycle.order = cover.cycle_vertices(0);
    return finish(true, "");
}

}  // namespace hamfactor
