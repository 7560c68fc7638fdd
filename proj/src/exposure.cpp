#include "hamfactor/exposure.hpp"

#include <cmath>
#include <string>

namespace hamfactor {

std::size_t default_exposure_budget(std::size_t n, double beta) {
    const double x = static_cast<double>(n);
    if (n < 2) return 1;
    return static_cast<std::size_t>(std::ceil(beta * std::pow(x, 0.75) * std::log(x)));
}

ExposureOracle::ExposureOracle(std::vector<Vertex> pi, std::size_t budget)
    : pi_(std::move(pi)),
      pi_inv_(pi_.size(), kNoVertex),
      image_(pi_.size(), kNoVertex),
      preimage_(pi_.size(), kNoVertex),
      budget_(budget),
      cap_(budget) {
    for (std::size_t g = 0; g < pi_.size(); ++g) {
        Vertex f = pi_[g];
        if (f < 0 || static_cast<std::size_t>(f) >= pi_.size() || pi_inv_[static_cast<std::size_t>(f)] != kNoVertex) {
            throw std::invalid_argument("pi is not a bijection");
        }
        pi_inv_[static_cast<std::size_t>(f)] = static_cast<Vertex>(g);
    }
}

ExposureOracle ExposureOracle::sample(std::size_t n, Rng rng, std::size_t budget) {
    std::vector<Vertex> pi(n);
    for (std::size_t i = 0; i < n; ++i) pi[i] = static_cast<Vertex>(i);
    rng.shuffle(std::span<Vertex>(pi));
    return ExposureOracle(std::move(pi), budget);
}

void ExposureOracle::reveal(Vertex g, Vertex f) {
    if (exposed_ >= cap_) {
        const bool global = cap_ >= budget_;
        throw BudgetExhausted(std::string(global ? "exposure budget" : "per-round exposure cap") + " of " +
                                  std::to_string(cap_) + " exhausted",
                              global);
    }
    image_[static_cast<std::size_t>(g)] = f;
    preimage_[static_cast<std::size_t>(f)] = g;
    ++exposed_;
}

Vertex ExposureOracle::expose_preimage(Vertex f) {
    if (f < 0 || static_cast<std::size_t>(f) >= pi_.size()) throw std::out_of_range("F-vertex out of range");
    Vertex g = preimage_[static_cast<std::size_t>(f)];
    const bool fresh = g == kNoVertex;
    if (fresh) {
        g = pi_inv_[static_cast<std::size_t>(f)];
        reveal(g, f);
    }
    log_.push_back({Side::F, f, g, fresh});
    return g;
}

Vertex ExposureOracle::expose_image(Vertex g) {
    if (g < 0 || static_cast<std::size_t>(g) >= pi_.size()) throw std::out_of_range("G-vertex out of range");
    Vertex f = image_[static_cast<std::size_t>(g)];
    const bool fresh = f == kNoVertex;
    if (fresh) {
        f = pi_[static_cast<std::size_t>(g)];
        reveal(g, f);
    }
    log_.push_back({Side::G, g, f, fresh});
    return f;
}

bool ExposureOracle::is_exposed(Vertex v, Side side) const { return side == Side::F ? is_exposed_f(v) : is_exposed_g(v); }

nlohmann::json ExposureOracle::log_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : log_) {
        out.push_back({{"side", e.query_side == Side::G ? "G" : "F"},
                       {"query", e.query},
                       {"answer", e.answer},
                       {"fresh", e.fresh}});
    }
    return out;
}

ExposureOracle ExposureOracle::replay(std::vector<Vertex> pi, std::size_t budget, std::span<const ExposureEvent> log) {
    ExposureOracle o(std::move(pi), budget);
    for (const auto& e : log) {
        if (e.query_side == Side::F) {
            o.expose_preimage(e.query);
        } else {
            o.expose_image(e.query);
        }
    }
    return o;
}

bool ExposureOracle::check_invariants() const {
    std::size_t count = 0;
    for (std::size_t g = 0; g < image_.size(); ++g) {
        Vertex f = image_[g];
        if (f == kNoVertex) continue;
        ++count;
        if (f != pi_[g] || preimage_[static_cast<std::size_t>(f)] != static_cast<Vertex>(g)) return false;
    }
    std::size_t back = 0;
    for (Vertex g : preimage_) back += g != kNoVertex;
    return count == exposed_ && back == exposed_;
}

}  // namespace hamfactor
