#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamfactor/cycle_cover.hpp"
#include "hamfactor/exposure.hpp"
#include "hamfactor/graph.hpp"
#include "hamfactor/phase1.hpp"
#include "hamfactor/rng.hpp"
#include "hamfactor/verify.hpp"

namespace hamfactor {

struct Phase2Params {
    double a = 0.0;               // cut spacing scale; 0 means n / ln n
    std::size_t m_max = 20;       // largest joint plan size
    std::size_t plan_retries = 1;  // fresh cut-set plans before falling back to merge rounds
    std::size_t cut_attempts = 1000;
    std::size_t merge_retry_budget = 200;
    Phase1Params merge;  // exploration settings for merge rounds
};

// Thrown when a cycle lacks enough unexposed, well-spaced cut positions.
class PlanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ArcMatrix = std::vector<std::vector<char>>;

struct JoinPlan {
    double a = 0.0;
    std::vector<std::size_t> cuts_per_cycle;  // m_i, all odd
    // Cut j deletes the cover edge {u[j], v[j]} with v[j] = succ(u[j]).
    std::vector<Vertex> u;
    std::vector<Vertex> v;
    std::vector<int> phi;  // next cut on the same cycle
    // Segment j runs from v[j] along the cover to u[phi[j]].
    std::vector<std::vector<Vertex>> segments;

    std::size_t m() const { return u.size(); }
    nlohmann::json to_json() const;
};

// 2 * floor(c / (20 a)) + 1.
std::size_t cut_count(std::size_t cycle_length, double a);

JoinPlan choose_cut_set(const CycleCover& cover, const ExposureOracle& oracle, const Phase2Params& params, Rng& rng);

// Exposes pi^{-1} of every cut endpoint; arc i -> j iff
// {pi^{-1}(v_i), pi^{-1}(u_phi(j))} is an edge of g23. No loops.
ArcMatrix build_connector(const JoinPlan& plan, ExposureOracle& oracle, const Graph& g23);

// Some rho forming a single m-cycle with arc(i, rho(i)) for all i, by subset
// dynamic programming (m <= 20). Lexicographically first predecessor choices.
std::optional<std::vector<int>> find_cyclic_join(const ArcMatrix& arcs);

// Follows rho from segment 0, walking each segment from u_phi(i) back to v_i.
// Throws std::logic_error if rho is not a single cycle.
HamCycle assemble_hamilton(const JoinPlan& plan, const std::vector<int>& rho);

bool is_single_cycle(const std::vector<int>& perm);
// +1 or -1.
int permutation_sign(const std::vector<int>& perm);
// phi o rho is a single m-cycle.
bool is_in_R_M(const std::vector<int>& phi, const std::vector<int>& rho);

struct Phase2Result {
    bool success = false;
    HamCycle cycle;
    std::size_t plan_attempts = 0;
    std::size_t merge_rounds = 0;
    std::size_t merge_failures = 0;
    std::size_t rotations = 0;
    std::size_t exposures = 0;
    std::vector<RoundStats> rounds;
    std::string failure;
};

// Joins the cycles of an all-long cover into a Hamilton cycle: a few fresh
// cut-set plans first, then extension-closure merge rounds until one cycle
// remains.
Phase2Result run_phase2(const CycleCover& cover, ExposureOracle& oracle, const Graph& g23, const Phase2Params& params,
                        Rng& rng, const TraceSink& trace = {});

}  // namespace hamfactor
