#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hamfactor/generators.hpp"
#include "hamfactor/graph.hpp"
#include "hamfactor/phase1.hpp"
#include "hamfactor/phase2.hpp"
#include "hamfactor/verify.hpp"

namespace hamfactor {

// Phase I parameters start from a preset and then take explicit overrides.
struct Phase1Overrides {
    std::string preset = "tuned";  // "tuned" or "defaults"
    std::optional<double> c0, tau, lambda;
    std::optional<std::size_t> n0, t_max, target_leaves;
    std::optional<double> grow_quorum, lengthen_min_fraction, close_pool_fraction;
    std::optional<std::size_t> close_neighbors, close_min_partners, cycle_retry_limit, retry_budget,
        round_exposure_cap;

    Phase1Params resolve(std::size_t n) const;
};

struct ExperimentConfig {
    std::size_t n = 2000;
    std::size_t d = 3;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    SamplerMode sampler = SamplerMode::pairing_uniform;
    // "random" for a fresh random d-regular graph per trial, a family name
    // ("disjoint-cliques", "circulant", "prism"), or "file".
    std::string graph = "random";
    std::filesystem::path graph_file;
    Phase1Overrides phase1;
    std::size_t plan_retries = 1;
    std::size_t merge_retry_budget = 200;
    double beta = 20.0;  // exposure budget factor
    std::size_t workers = 1;
    bool timing = true;  // false writes ms = 0, making the CSV reproducible byte for byte
    std::filesystem::path csv_path;
    std::filesystem::path trace_path;
    std::filesystem::path summary_path;

    // Throws std::invalid_argument on inconsistent settings.
    void validate() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

enum class TrialOutcome { success, phase1_fail, phase2_fail, budget_fail };
std::string_view to_string(TrialOutcome o);

struct TrialResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    TrialOutcome outcome = TrialOutcome::phase1_fail;
    std::size_t exposures = 0;
    double exposure_ratio = 0.0;  // exposures / n^{3/4}
    std::size_t rounds = 0;
    std::size_t rotations = 0;
    std::size_t plan_retries = 0;
    double ms = 0.0;
    std::size_t n0 = 0;
    bool phase1_success = false;
    // Accepted rounds after which the short-cycle set did not strictly shrink,
    // plus one if the phase I output still has a cycle below n0.
    std::size_t monotone_violations = 0;
    std::string failure;
    HamCycle cycle;  // filled on success
};

// Seed of trial `index` under a master seed.
std::uint64_t trial_seed(std::uint64_t master, std::size_t index);

// One trial. `g` is the fixed input graph when the config does not sample one.
TrialResult run_trial(const ExperimentConfig& cfg, std::size_t index, const Graph* fixed = nullptr,
                      std::vector<std::string>* trace_lines = nullptr);

struct ExperimentReport {
    std::vector<TrialResult> rows;
    std::size_t successes = 0;
    double success_rate = 0.0;
    double median_exposed_fraction = 0.0;  // over successful trials
    double median_exposure_ratio = 0.0;    // over successful trials
    double max_ms = 0.0;

    nlohmann::json summary() const;
};

// Runs every trial (in parallel up to cfg.workers) and writes the CSV, trace and
// summary files named in the config.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

inline constexpr std::string_view kResultsHeader = "seed,outcome,exposures,exposure_ratio,rounds,rotations,plan_retries,ms";
void write_results(std::ostream& out, const std::vector<TrialResult>& rows);
void write_results(const std::filesystem::path& path, const std::vector<TrialResult>& rows);

}  // namespace hamfactor
