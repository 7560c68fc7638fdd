#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamfactor/cycle_cover.hpp"
#include "hamfactor/exposure.hpp"
#include "hamfactor/graph.hpp"
#include "hamfactor/near_two_factor.hpp"
#include "hamfactor/path_state.hpp"

namespace hamfactor {

using TraceSink = std::function<void(const nlohmann::json&)>;

inline constexpr double kTunedC0 = 0.1;
inline constexpr double kTunedLambda = 1.0;

struct Phase1Params {
    std::size_t n0 = 3;             // cycles with fewer vertices are short
    std::size_t t_max = 1;          // exploration depth cap
    std::size_t target_leaves = 1;  // leaves wanted per exploration root
    double grow_quorum = 0.5;       // fraction of roots that must reach the target
    double lengthen_min_fraction = 0.1;
    std::size_t close_neighbors = 1;     // G-neighbours tried per closing candidate
    std::size_t close_min_partners = 1;  // partners a closing candidate needs
    // Closing partners are restricted to the leaves with the fewest remaining
    // cycles, relaxing the cutoff until this fraction of admissible leaves is
    // kept. 1 keeps every admissible leaf.
    double close_pool_fraction = 1.0;
    std::size_t cycle_retry_limit = 50;  // failed rounds allowed per short cycle
    std::size_t retry_budget = 200;      // failed rounds allowed in total
    std::size_t round_exposure_cap = 0;  // 0: no per-round cap

    // n0 = ceil(c0 n / ln n), t_max = ceil(tau log4 n), target = ceil(lambda sqrt n).
    static Phase1Params defaults(std::size_t n, double c0 = 0.2, double tau = 1.0, double lambda = 2.0);
    // Desk-scale settings used by the end-to-end runs: smaller n0 and target,
    // every G-neighbour tried when closing.
    static Phase1Params tuned(std::size_t n);
    // Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

// Operational form of the acceptability rule on an explicit near-2-factor.
bool is_acceptable(const NearTwoFactor& l, const RotationRecord& r, std::size_t n0);

enum class StepStatus { success, soft_failure, hard_failure };
std::string_view to_string(StepStatus s);

enum class TraverseStatus { candidates, empty, hard_failure };

struct TraverseResult {
    TraverseStatus status = TraverseStatus::empty;
    std::array<Vertex, 2> w{kNoVertex, kNoVertex};
    // x[2j + k] is the k-th neighbour of w[j].
    std::array<Vertex, 4> x{kNoVertex, kNoVertex, kNoVertex, kNoVertex};
    std::size_t exposures = 0;

    std::array<RotationRecord, 4> rotations(Vertex v) const {
        return {RotationRecord{v, w[0], x[0]}, RotationRecord{v, w[0], x[1]}, RotationRecord{v, w[1], x[2]},
                RotationRecord{v, w[1], x[3]}};
    }
};

// What a traversal must stay away from: reserved images are fatal, blocked
// candidates (the current endpoint sets) only disqualify. Empty mask: none.
struct Avoid {
    const std::vector<char>& reserved;
    std::function<bool(Vertex)> blocked;
};

// One traversal step from the F-vertex v_tilde; neighbours of the exposed
// images are read from l.
TraverseResult traverse(Vertex v_tilde, const NearTwoFactor& l, const Avoid& avoid, ExposureOracle& oracle,
                        const Graph& g23);

struct ExplorationNode {
    int parent = -1;
    int root = 0;
    int level = 0;
    RotationRecord rotation;
    PathState state;
};

struct ExplorationTree {
    std::vector<ExplorationNode> nodes;
    std::vector<std::vector<Vertex>> levels;  // endpoint sets S_0, S_1, ...

    std::vector<RotationRecord> history(int node) const;
};

struct GrowResult {
    StepStatus status = StepStatus::soft_failure;
    ExplorationTree tree;
    std::vector<std::vector<int>> leaves;  // per root, filtered node ids
    std::size_t exposures = 0;
    std::size_t traversals = 0;
    std::size_t levels = 0;
};

// Joint exploration from several roots sharing one free end. Traversals are
// done once per endpoint vertex; each root applies the resulting rotations to
// its own state, keeping a node's four children only if all four rotations are
// valid and acceptable. Stops once grow_quorum of the roots hold
// target_leaves leaves, or after t_max levels.
// `first`, when given, is an earlier traversal of the shared free end; it is
// used in place of a fresh one after re-checking its candidates.
GrowResult grow_paths(const RoundBase& base, std::vector<PathState> roots, const std::vector<char>& reserved,
                      const std::vector<char>& opposing, ExposureOracle& oracle, const Graph& g23,
                      const Phase1Params& params, const TraverseResult* first = nullptr);

struct LengthenResult {
    StepStatus status = StepStatus::soft_failure;
    std::vector<int> kept;  // node ids; rotated leaves get a new child node
    std::size_t exposures = 0;
    std::size_t discarded = 0;
    std::size_t reserved_hits = 0;  // exposed images that were reserved; leaf discarded
};

// Gives every short-path leaf one chance to absorb a long cycle.
LengthenResult lengthen_paths(const RoundBase& base, ExplorationTree& tree, const std::vector<int>& leaves,
                              const std::vector<char>& reserved, ExposureOracle& oracle, const Graph& g23,
                              const Phase1Params& params);

struct CloseCandidate {
    Vertex x = kNoVertex;
    std::vector<Vertex> partners;  // sorted
};

struct CloseResult {
    StepStatus status = StepStatus::soft_failure;
    std::size_t candidate = 0;
    Vertex x = kNoVertex;
    Vertex y = kNoVertex;
    std::size_t exposures = 0;
    std::size_t tried = 0;
    std::size_t reserved_hits = 0;  // exposed images that were reserved; skipped
};

// Exposes pi^{-1}(x) and the images of its unexposed G-neighbours for one
// candidate after another until an image lands among that candidate's partners.
// Images that land on reserved vertices are counted and skipped.
CloseResult close_cycle(const std::vector<CloseCandidate>& candidates, ExposureOracle& oracle, const Graph& g23,
                        const std::vector<char>& reserved, const Phase1Params& params);

enum class RoundMode {
    eliminate_short,  // break a short cycle, produce no new short one
    merge,            // reduce the number of cycles
};

struct RoundStats {
    std::size_t attempt = 0;
    Vertex u0 = kNoVertex;
    Vertex v0 = kNoVertex;
    StepStatus status = StepStatus::soft_failure;
    std::string stage;  // where a failure happened
    std::size_t leaves_first = 0;
    std::size_t lengthened = 0;
    std::size_t leaves_second = 0;
    std::size_t close_candidates = 0;
    std::size_t exposures = 0;
    // exposures per stage: first growth, lengthening, second growth, closing
    std::array<std::size_t, 4> stage_exposures{};
    std::size_t traversals = 0;
    std::size_t reserved_hits = 0;
    std::size_t rotations = 0;
    std::size_t cycles_before = 0;
    std::size_t cycles_after = 0;

    nlohmann::json to_json() const;
};

struct RoundOutcome {
    RoundStats stats;
    CycleCover cover;  // valid on success
    std::vector<RotationRecord> first_side;
    std::vector<RotationRecord> second_side;
    Edge closing;
};

// One extension-closure round starting by deleting {u0, v0} from cover.
// A per-round cap on the oracle surfaces as a soft failure.
RoundOutcome run_round(const CycleCover& cover, Vertex u0, Vertex v0, RoundMode mode, const std::vector<char>& reserved,
                       ExposureOracle& oracle, const Graph& g23, const Phase1Params& params);

struct Phase1Result {
    bool success = false;
    CycleCover cover;
    std::vector<RoundStats> rounds;
    std::size_t accepted_rounds = 0;
    std::size_t failed_rounds = 0;
    std::size_t rotations = 0;
    std::size_t exposures = 0;
    std::size_t reserved_initial = 0;  // |X0|
    // Short-cycle vertex sets before the first round and after each accepted one.
    std::vector<std::vector<std::vector<Vertex>>> short_history;
    std::string failure;
};

// Removes all cycles shorter than n0. Throws std::logic_error if an accepted
// round fails to shrink the set of short cycles.
Phase1Result eliminate_short_cycles(const CycleCover& f, const Graph& g23, ExposureOracle& oracle,
                                    const Phase1Params& params, const TraceSink& trace = {});

}  // namespace hamfactor
