#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "hamfactor/graph.hpp"
#include "hamfactor/rng.hpp"

namespace hamfactor {

enum class Side { G, F };

// Thrown when an exposure would exceed the active limit. `global` is false when
// only a temporary (per-round) cap was hit.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& what, bool global) : std::runtime_error(what), global_(global) {}
    bool global() const { return global_; }

private:
    bool global_;
};

struct ExposureEvent {
    Side query_side;  // side of the queried vertex
    Vertex query;
    Vertex answer;
    bool fresh;  // false for repeated queries

    friend bool operator==(const ExposureEvent&, const ExposureEvent&) = default;
};

// Default budget: ceil(beta * n^{3/4} * ln n).
std::size_t default_exposure_budget(std::size_t n, double beta = 20.0);

// Hidden random bijection pi: V(G) -> V(F), revealed one pair at a time.
class ExposureOracle {
public:
    // pi[g] = F-image of G-vertex g.
    ExposureOracle(std::vector<Vertex> pi, std::size_t budget);
    static ExposureOracle sample(std::size_t n, Rng rng, std::size_t budget);

    std::size_t num_vertices() const { return pi_.size(); }

    // pi^{-1}(f). Charges the budget only on the first exposure of the pair.
    Vertex expose_preimage(Vertex f);
    // pi(g).
    Vertex expose_image(Vertex g);

    bool is_exposed(Vertex v, Side side) const;
    bool is_exposed_f(Vertex f) const { return preimage_[static_cast<std::size_t>(f)] != kNoVertex; }
    bool is_exposed_g(Vertex g) const { return image_[static_cast<std::size_t>(g)] != kNoVertex; }
    std::size_t exposed_count() const { return exposed_; }

    std::size_t budget() const { return budget_; }
    // Temporary cap on exposed_count(); clamped to the budget.
    void set_cap(std::size_t cap) { cap_ = cap < budget_ ? cap : budget_; }
    void clear_cap() { cap_ = budget_; }

    // F-vertex -> exposed G-preimage, kNoVertex where hidden.
    std::span<const Vertex> exposed_preimages() const { return preimage_; }
    std::span<const Vertex> exposed_images() const { return image_; }

    const std::vector<ExposureEvent>& log() const { return log_; }
    nlohmann::json log_json() const;

    // Re-issues the logged queries against a fresh oracle over the same pi.
    static ExposureOracle replay(std::vector<Vertex> pi, std::size_t budget, std::span<const ExposureEvent> log);

    bool check_invariants() const;

private:
    void reveal(Vertex g, Vertex f);

    std::vector<Vertex> pi_;
    std::vector<Vertex> pi_inv_;
    std::vector<Vertex> image_;     // G -> F, exposed part
    std::vector<Vertex> preimage_;  // F -> G, exposed part
    std::size_t exposed_ = 0;
    std::size_t budget_;
    std::size_t cap_;
    std::vector<ExposureEvent> log_;
};

}  // namespace hamfactor
