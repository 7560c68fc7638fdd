#include "hamfactor/cycle_cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hamfactor {

CycleCover CycleCover::from_successors(std::vector<Vertex> succ) {
    const std::size_t n = succ.size();
    CycleCover c;
    c.pred_.assign(n, kNoVertex);
    for (std::size_t v = 0; v < n; ++v) {
        Vertex s = succ[v];
        if (s < 0 || static_cast<std::size_t>(s) >= n || c.pred_[static_cast<std::size_t>(s)] != kNoVertex) {
            throw std::invalid_argument("successor map is not a permutation");
        }
        c.pred_[static_cast<std::size_t>(s)] = static_cast<Vertex>(v);
    }
    c.cycle_id_.assign(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        if (c.cycle_id_[start] != -1) continue;
        int id = static_cast<int>(c.cycle_lengths_.size());
        std::size_t len = 0;
        Vertex v = static_cast<Vertex>(start);
        do {
            c.cycle_id_[static_cast<std::size_t>(v)] = id;
            ++len;
            v = succ[static_cast<std::size_t>(v)];
        } while (v != static_cast<Vertex>(start));
        if (len < 3) {
            throw std::invalid_argument("cycle of length " + std::to_string(len) + " through vertex " +
                                        std::to_string(start));
        }
        c.cycle_lengths_.push_back(len);
        c.cycle_start_.push_back(static_cast<Vertex>(start));
    }
    c.succ_ = std::move(succ);
    return c;
}

std::size_t CycleCover::min_cycle_length() const {
    if (cycle_lengths_.empty()) return 0;
    return *std::min_element(cycle_lengths_.begin(), cycle_lengths_.end());
}

std::vector<Vertex> CycleCover::cycle_vertices(int id) const {
    std::vector<Vertex> out;
    out.reserve(cycle_length(id));
    Vertex s = cycle_start(id);
    Vertex v = s;
    do {
        out.push_back(v);
        v = succ(v);
    } while (v != s);
    return out;
}

bool CycleCover::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || static_cast<std::size_t>(u) >= succ_.size()) return false;
    return succ(u) == v || pred(u) == v;
}

std::vector<Edge> CycleCover::edges() const {
    std::vector<Edge> out;
    out.reserve(succ_.size());
    for (std::size_t v = 0; v < succ_.size(); ++v) out.emplace_back(static_cast<Vertex>(v), succ_[v]);
    return out;
}

bool CycleCover::check_invariants() const {
    const std::size_t n = succ_.size();
    if (pred_.size() != n || cycle_id_.size() != n) return false;
    std::vector<std::size_t> counted(cycle_lengths_.size(), 0);
    std::size_t total = 0;
    for (std::size_t v = 0; v < n; ++v) {
        Vertex s = succ_[v];
        if (s < 0 || static_cast<std::size_t>(s) >= n) return false;
        if (pred_[static_cast<std::size_t>(s)] != static_cast<Vertex>(v)) return false;
        int id = cycle_id_[v];
        if (id < 0 || static_cast<std::size_t>(id) >= cycle_lengths_.size()) return false;
        if (cycle_id_[static_cast<std::size_t>(s)] != id) return false;
        ++counted[static_cast<std::size_t>(id)];
    }
    for (std::size_t i = 0; i < cycle_lengths_.size(); ++i) {
        if (counted[i] != cycle_lengths_[i] || cycle_lengths_[i] < 3) return false;
        total += cycle_lengths_[i];
    }
    return total == n;
}

CycleCover cycle_decomposition(std::span<const std::array<Vertex, 2>> neighbors) {
    const std::size_t n = neighbors.size();
    for (std::size_t v = 0; v < n; ++v) {
        for (Vertex w : neighbors[v]) {
            if (w < 0 || static_cast<std::size_t>(w) >= n || w == static_cast<Vertex>(v)) {
                throw std::invalid_argument("vertex " + std::to_string(v) + " does not have degree 2");
            }
        }
        if (neighbors[v][0] == neighbors[v][1]) {
            throw std::invalid_argument("double edge at vertex " + std::to_string(v));
        }
    }
    std::vector<Vertex> succ(n, kNoVertex);
    for (std::size_t start = 0; start < n; ++start) {
        if (succ[start] != kNoVertex) continue;
        Vertex prev = static_cast<Vertex>(start);
        Vertex cur = std::min(neighbors[start][0], neighbors[start][1]);
        succ[start] = cur;
        while (cur != static_cast<Vertex>(start)) {
            const auto& nb = neighbors[static_cast<std::size_t>(cur)];
            Vertex next;
            if (nb[0] == prev) {
                next = nb[1];
            } else if (nb[1] == prev) {
                next = nb[0];
            } else {
                throw std::invalid_argument("neighbour lists are not symmetric at vertex " + std::to_string(cur));
            }
            if (succ[static_cast<std::size_t>(cur)] != kNoVertex) {
                throw std::invalid_argument("neighbour lists are not symmetric at vertex " + std::to_string(cur));
            }
            succ[static_cast<std::size_t>(cur)] = next;
            prev = cur;
            cur = next;
        }
    }
    return CycleCover::from_successors(std::move(succ));
}

CycleCover cycle_decomposition(const Graph& g) {
    std::vector<std::array<Vertex, 2>> nb(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        auto adj = g.neighbors(static_cast<Vertex>(v));
        if (adj.size() != 2) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " + std::to_string(adj.size()) +
                                        ", expected 2");
        }
        nb[v] = {adj[0], adj[1]};
    }
    return cycle_decomposition(nb);
}

std::vector<std::vector<Vertex>> short_cycles(const CycleCover& cover, std::size_t n0) {
    std::vector<std::vector<Vertex>> out;
    for (std::size_t i = 0; i < cover.num_cycles(); ++i) {
        if (cover.cycle_length(static_cast<int>(i)) >= n0) continue;
        auto vs = cover.cycle_vertices(static_cast<int>(i));
        std::sort(vs.begin(), vs.end());
        out.push_back(std::move(vs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hamfactor
