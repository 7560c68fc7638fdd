#include "hamfactor/near_two_factor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hamfactor {

NearTwoFactor delete_edge(const CycleCover& cover, Vertex fixed, Vertex free) {
    if (!cover.has_edge(fixed, free)) {
        throw std::invalid_argument("edge " + std::to_string(fixed) + "-" + std::to_string(free) +
                                    " is not in the cover");
    }
    NearTwoFactor l;
    l.nbr_.resize(cover.num_vertices());
    for (std::size_t v = 0; v < cover.num_vertices(); ++v) {
        l.nbr_[v] = {cover.pred(static_cast<Vertex>(v)), cover.succ(static_cast<Vertex>(v))};
    }
    l.unlink(fixed, free);
    l.fixed_ = fixed;
    l.free_ = free;
    return l;
}

NearTwoFactor rotate(NearTwoFactor l, const RotationRecord& r) {
    l.apply(r);
    return l;
}

bool NearTwoFactor::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || static_cast<std::size_t>(a) >= nbr_.size() || b == kNoVertex) return false;
    const auto& nb = nbr_[static_cast<std::size_t>(a)];
    return nb[0] == b || nb[1] == b;
}

void NearTwoFactor::unlink(Vertex a, Vertex b) {
    auto drop = [this](Vertex from, Vertex to) {
        auto& nb = nbr_[static_cast<std::size_t>(from)];
        if (nb[0] == to) {
            nb[0] = nb[1];
            nb[1] = kNoVertex;
        } else if (nb[1] == to) {
            nb[1] = kNoVertex;
        } else {
            throw std::logic_error("unlink of a missing edge");
        }
    };
    drop(a, b);
    drop(b, a);
}

void NearTwoFactor::link(Vertex a, Vertex b) {
    auto add = [this](Vertex from, Vertex to) {
        auto& nb = nbr_[static_cast<std::size_t>(from)];
        if (nb[0] == kNoVertex) {
            nb[0] = to;
        } else if (nb[1] == kNoVertex) {
            nb[1] = to;
        } else {
            throw std::logic_error("link at a vertex of degree 2");
        }
    };
    add(a, b);
    add(b, a);
}

Vertex NearTwoFactor::path_neighbor(Vertex end) const { return nbr_[static_cast<std::size_t>(end)][0]; }

std::vector<Vertex> NearTwoFactor::path() const {
    std::vector<Vertex> out{fixed_};
    Vertex prev = kNoVertex;
    Vertex cur = fixed_;
    while (cur != free_) {
        const auto& nb = nbr_[static_cast<std::size_t>(cur)];
        Vertex next = nb[0] != prev ? nb[0] : nb[1];
        if (next == kNoVertex || out.size() > nbr_.size()) throw std::logic_error("broken path");
        prev = cur;
        cur = next;
        out.push_back(cur);
    }
    return out;
}

std::vector<std::vector<Vertex>> NearTwoFactor::cycles() const {
    std::vector<char> seen(nbr_.size(), 0);
    for (Vertex v : path()) seen[static_cast<std::size_t>(v)] = 1;
    std::vector<std::vector<Vertex>> out;
    for (std::size_t s = 0; s < nbr_.size(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> cyc;
        Vertex prev = kNoVertex;
        Vertex cur = static_cast<Vertex>(s);
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            cyc.push_back(cur);
            const auto& nb = nbr_[static_cast<std::size_t>(cur)];
            Vertex next = (prev == kNoVertex) ? std::min(nb[0], nb[1]) : (nb[0] != prev ? nb[0] : nb[1]);
            prev = cur;
            cur = next;
        } while (cur != static_cast<Vertex>(s));
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<std::vector<Vertex>> NearTwoFactor::short_cycles(std::size_t n0) const {
    std::vector<std::vector<Vertex>> out;
    for (auto& c : cycles()) {
        if (c.size() >= n0) continue;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool NearTwoFactor::can_rotate(const RotationRecord& r) const {
    const auto n = static_cast<Vertex>(nbr_.size());
    if (r.v != free_ || r.w < 0 || r.w >= n || r.x < 0 || r.x >= n) return false;
    if (r.w == r.v || !has_edge(r.w, r.x) || has_edge(r.v, r.w)) return false;
    // Splitting off {w..v} as a cycle when w is the second path vertex would
    // leave the fixed end as a one-vertex path.
    return !(r.x == fixed_ && path_neighbor(fixed_) == r.w);
}

void NearTwoFactor::apply(const RotationRecord& r) {
    if (!can_rotate(r)) {
        throw std::logic_error("invalid rotation (" + std::to_string(r.v) + "," + std::to_string(r.w) + "," +
                               std::to_string(r.x) + ")");
    }
    unlink(r.w, r.x);
    link(r.v, r.w);
    free_ = r.x;
}

CycleCover NearTwoFactor::close() const {
    NearTwoFactor copy = *this;
    copy.link(fixed_, free_);
    return cycle_decomposition(copy.nbr_);
}

bool NearTwoFactor::check_invariants() const {
    const std::size_t n = nbr_.size();
    if (fixed_ == free_ || fixed_ < 0 || free_ < 0) return false;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& nb = nbr_[v];
        const bool is_end = static_cast<Vertex>(v) == fixed_ || static_cast<Vertex>(v) == free_;
        if (is_end) {
            if (nb[0] == kNoVertex || nb[1] != kNoVertex) return false;
        } else if (nb[0] == kNoVertex || nb[1] == kNoVertex || nb[0] == nb[1]) {
            return false;
        }
        for (Vertex w : nb) {
            if (w == kNoVertex) continue;
            if (w < 0 || static_cast<std::size_t>(w) >= n || w == static_cast<Vertex>(v)) return false;
            if (!has_edge(w, static_cast<Vertex>(v))) return false;
        }
    }
    try {
        std::size_t covered = path().size();
        for (const auto& c : cycles()) {
            if (c.size() < 3) return false;
            covered += c.size();
        }
        return covered == n;
    } catch (const std::logic_error&) {
        return false;
    }
}

}  // namespace hamfactor
