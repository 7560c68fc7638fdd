#include "hamfactor/phase1.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace hamfactor {

namespace {

bool marked(const std::vector<char>& mask, Vertex v) {
    return !mask.empty() && mask[static_cast<std::size_t>(v)] != 0;
}

std::vector<std::vector<Vertex>> as_sets(std::vector<std::vector<Vertex>> cycles) {
    for (auto& c : cycles) std::sort(c.begin(), c.end());
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

}  // namespace

Phase1Params Phase1Params::defaults(std::size_t n, double c0, double tau, double lambda) {
    Phase1Params p;
    const double ln = std::log(static_cast<double>(std::max<std::size_t>(n, 3)));
    p.n0 = std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(c0 * static_cast<double>(n) / ln)));
    p.t_max = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(tau * ln / std::log(4.0))));
    p.target_leaves = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(lambda * std::sqrt(static_cast<double>(n)))));
    return p;
}

Phase1Params Phase1Params::tuned(std::size_t n) {
    Phase1Params p = defaults(n, kTunedC0, 1.0, kTunedLambda);
    p.close_neighbors = 3;
    return p;
}

void Phase1Params::validate() const {
    if (n0 < 3) throw std::invalid_argument("n0 must be at least 3");
    if (t_max < 1) throw std::invalid_argument("t_max must be at least 1");
    if (target_leaves < 1) throw std::invalid_argument("target_leaves must be at least 1");
    if (!(grow_quorum > 0.0 && grow_quorum <= 1.0)) throw std::invalid_argument("grow_quorum must lie in (0, 1]");
    if (lengthen_min_fraction < 0.0 || lengthen_min_fraction > 1.0)
        throw std::invalid_argument("lengthen_min_fraction must lie in [0, 1]");
    if (close_neighbors < 1) throw std::invalid_argument("close_neighbors must be at least 1");
    if (!(close_pool_fraction > 0.0 && close_pool_fraction <= 1.0))
        throw std::invalid_argument("close_pool_fraction must lie in (0, 1]");
}

bool is_acceptable(const NearTwoFactor& l, const RotationRecord& r, std::size_t n0) {
    if (!l.can_rotate(r)) return false;
    const std::size_t before = l.path_size();
    const auto old_cycles = as_sets(l.cycles());
    const NearTwoFactor next = rotate(l, r);
    if (before >= n0 && next.path_size() < n0) return false;
    for (auto& c : as_sets(next.cycles())) {
        if (c.size() < n0 && !std::binary_search(old_cycles.begin(), old_cycles.end(), c)) return false;
    }
    return true;
}

std::string_view to_string(StepStatus s) {
    switch (s) {
        case StepStatus::success:
            return "success";
        case StepStatus::soft_failure:
            return "soft-failure";
        case StepStatus::hard_failure:
            return "hard-failure";
    }
    return "?";
}

TraverseResult traverse(Vertex v_tilde, const NearTwoFactor& l, const Avoid& avoid, ExposureOracle& oracle,
                        const Graph& g23) {
    TraverseResult res;
    const std::size_t start = oracle.exposed_count();
    const Vertex vg = oracle.expose_preimage(v_tilde);
    auto done = [&](TraverseStatus s) {
        res.status = s;
        res.exposures = oracle.exposed_count() - start;
        return res;
    };
    const auto nb = g23.neighbors(vg);
    for (Vertex u : nb)
        if (oracle.is_exposed_g(u)) return done(TraverseStatus::empty);
    if (nb.size() < 2) return done(TraverseStatus::empty);
    // neighbour lists are sorted, so these are the two lowest-index ones
    for (int j = 0; j < 2; ++j) res.w[static_cast<std::size_t>(j)] = oracle.expose_image(nb[static_cast<std::size_t>(j)]);
    for (Vertex w : res.w)
        if (marked(avoid.reserved, w)) return done(TraverseStatus::hard_failure);
    for (int j = 0; j < 2; ++j) {
        const auto& xn = l.neighbors(res.w[static_cast<std::size_t>(j)]);
        res.x[static_cast<std::size_t>(2 * j)] = xn[0];
        res.x[static_cast<std::size_t>(2 * j + 1)] = xn[1];
    }
    for (std::size_t i = 0; i < 4; ++i) {
        const Vertex x = res.x[i];
        if (x == kNoVertex) return done(TraverseStatus::empty);
        for (std::size_t k = 0; k < i; ++k)
            if (res.x[k] == x) return done(TraverseStatus::empty);
        if (oracle.is_exposed_f(x) || marked(avoid.reserved, x) || (avoid.blocked && avoid.blocked(x)))
            return done(TraverseStatus::empty);
    }
    return done(TraverseStatus::candidates);
}

std::vector<RotationRecord> ExplorationTree::history(int node) const {
    std::vector<RotationRecord> out;
    for (int cur = node; cur >= 0 && nodes[static_cast<std::size_t>(cur)].parent >= 0;
         cur = nodes[static_cast<std::size_t>(cur)].parent)
        out.push_back(nodes[static_cast<std::size_t>(cur)].rotation);
    std::reverse(out.begin(), out.end());
    return out;
}

GrowResult grow_paths(const RoundBase& base, std::vector<PathState> roots, const std::vector<char>& reserved,
                      const std::vector<char>& opposing, ExposureOracle& oracle, const Graph& g23,
                      const Phase1Params& params, const TraverseResult* first) {
    GrowResult res;
    auto& tree = res.tree;
    res.leaves.assign(roots.size(), {});
    if (roots.empty()) return res;
    const Vertex start = roots.front().free_end();
    for (const auto& r : roots)
        if (r.free_end() != start) throw std::invalid_argument("grow_paths: roots must share their free end");
    if (!first && oracle.is_exposed_f(start)) return res;

    const std::size_t n = base.num_vertices();
    const std::size_t exposed_before = oracle.exposed_count();
    const std::size_t target = params.target_leaves;
    const std::size_t need = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(params.grow_quorum * static_cast<double>(roots.size()))));

    struct Group {
        Vertex v;
        std::vector<int> nodes;
    };
    std::vector<int> level_of(n, -1);
    std::vector<Group> frontier{{start, {}}};
    for (std::size_t r = 0; r < roots.size(); ++r) {
        tree.nodes.push_back({-1, static_cast<int>(r), 0, {}, std::move(roots[r])});
        frontier[0].nodes.push_back(static_cast<int>(r));
    }
    level_of[static_cast<std::size_t>(start)] = 0;
    tree.levels.push_back({start});

    std::vector<std::size_t> count(tree.nodes.size(), 1);
    std::size_t reached = target <= 1 ? count.size() : 0;
    auto adjust = [&](int root, long long delta) {
        auto& c = count[static_cast<std::size_t>(root)];
        const bool was = c >= target;
        c = static_cast<std::size_t>(static_cast<long long>(c) + delta);
        const bool now = c >= target;
        if (was && !now) --reached;
        if (!was && now) ++reached;
    };

    int t = 0;
    bool done = false;
    while (!done) {
        if (static_cast<std::size_t>(t) >= params.t_max || frontier.empty()) break;
        std::vector<Group> next;
        std::vector<Vertex> next_level;
        const int lo = t - 1;
        Avoid avoid{reserved, [&](Vertex x) {
                        const int l = level_of[static_cast<std::size_t>(x)];
                        return l >= 0 && l >= lo;
                    }};
        // Raw counts include leaves whose endpoints were exposed afterwards;
        // confirm with an exact count before stopping.
        auto quorum = [&](std::size_t from) {
            if (reached < need) return false;
            std::vector<std::size_t> exact(count.size(), 0);
            auto tally = [&](const Group& g) {
                if (oracle.is_exposed_f(g.v) || marked(reserved, g.v) || marked(opposing, g.v)) return;
                for (int id : g.nodes) ++exact[static_cast<std::size_t>(tree.nodes[static_cast<std::size_t>(id)].root)];
            };
            for (std::size_t i = from; i < frontier.size(); ++i) tally(frontier[i]);
            for (const auto& g : next) tally(g);
            std::size_t full = 0;
            for (std::size_t c : exact)
                if (c >= target) ++full;
            return full >= need;
        };
        std::size_t gi = 0;
        for (; gi < frontier.size(); ++gi) {
            if (quorum(gi)) break;
            const Group& g = frontier[gi];
            for (int id : g.nodes) adjust(tree.nodes[static_cast<std::size_t>(id)].root, -1);
            TraverseResult tr;
            if (t == 0 && first) {
                tr = *first;
                if (tr.status == TraverseStatus::candidates)
                    for (Vertex x : tr.x)
                        if (oracle.is_exposed_f(x)) tr.status = TraverseStatus::empty;
            } else {
                if (oracle.is_exposed_f(g.v)) continue;
                tr = traverse(g.v, base.near(), avoid, oracle, g23);
                ++res.traversals;
            }
            if (tr.status == TraverseStatus::hard_failure) {
                res.status = StepStatus::hard_failure;
                res.exposures = oracle.exposed_count() - exposed_before;
                res.levels = static_cast<std::size_t>(t);
                return res;
            }
            if (tr.status == TraverseStatus::empty) continue;
            const auto rots = tr.rotations(g.v);
            std::size_t first_group = next.size();
            bool opened = false;
            for (int id : g.nodes) {
                const PathState state = tree.nodes[static_cast<std::size_t>(id)].state;
                const int root = tree.nodes[static_cast<std::size_t>(id)].root;
                bool ok = true;
                for (const auto& r : rots) {
                    if (!is_acceptable(state.classify(base, r), state.path_size(), params.n0)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                if (!opened) {
                    opened = true;
                    first_group = next.size();
                    for (const Vertex x : tr.x) {
                        level_of[static_cast<std::size_t>(x)] = t + 1;
                        next.push_back({x, {}});
                        next_level.push_back(x);
                    }
                }
                for (std::size_t k = 0; k < 4; ++k) {
                    const int child = static_cast<int>(tree.nodes.size());
                    tree.nodes.push_back({id, root, t + 1, rots[k], state.rotated(base, rots[k])});
                    next[first_group + k].nodes.push_back(child);
                }
                adjust(root, 4);
            }
        }
        if (gi == 0 && next.empty()) break;  // quorum already met at the level start
        tree.levels.push_back(std::move(next_level));
        ++t;
        if (gi < frontier.size()) {
            // stopped part-way: unexpanded nodes of this level remain leaves
            std::vector<Group> rest(frontier.begin() + static_cast<std::ptrdiff_t>(gi), frontier.end());
            for (auto& g : next) rest.push_back(std::move(g));
            frontier = std::move(rest);
            done = true;
        } else {
            frontier = std::move(next);
        }
    }

    for (const auto& g : frontier) {
        if (oracle.is_exposed_f(g.v) || marked(reserved, g.v) || marked(opposing, g.v)) continue;
        for (int id : g.nodes) res.leaves[static_cast<std::size_t>(tree.nodes[static_cast<std::size_t>(id)].root)].push_back(id);
    }
    std::size_t full = 0;
    for (const auto& l : res.leaves)
        if (l.size() >= target) ++full;
    res.status = full >= need ? StepStatus::success : StepStatus::soft_failure;
    res.exposures = oracle.exposed_count() - exposed_before;
    res.levels = static_cast<std::size_t>(t);
    return res;
}

LengthenResult lengthen_paths(const RoundBase& base, ExplorationTree& tree, const std::vector<int>& leaves,
                              const std::vector<char>& reserved, ExposureOracle& oracle, const Graph& g23,
                              const Phase1Params& params) {
    LengthenResult res;
    const std::size_t exposed_before = oracle.exposed_count();
    std::vector<char> endpoint(base.num_vertices(), 0);
    for (int id : leaves) endpoint[static_cast<std::size_t>(tree.nodes[static_cast<std::size_t>(id)].state.free_end())] = 1;

    for (int id : leaves) {
        const PathState state = tree.nodes[static_cast<std::size_t>(id)].state;
        if (state.path_size() >= params.n0) {
            res.kept.push_back(id);
            continue;
        }
        const Vertex v = state.free_end();
        if (oracle.is_exposed_f(v)) {
            ++res.discarded;
            continue;
        }
        const Vertex vg = oracle.expose_preimage(v);
        Vertex wg = kNoVertex;
        for (Vertex u : g23.neighbors(vg)) {
            if (!oracle.is_exposed_g(u)) {
                wg = u;
                break;
            }
        }
        if (wg == kNoVertex) {
            ++res.discarded;
            continue;
        }
        const Vertex w = oracle.expose_image(wg);
        if (marked(reserved, w)) {
            ++res.reserved_hits;
            ++res.discarded;
            continue;
        }
        const auto nb = state.neighborhood(base, w);
        bool added = false;
        if (!nb.on_path && nb.size >= params.n0) {
            for (Vertex x : {nb.prev, nb.next}) {
                if (x == kNoVertex || oracle.is_exposed_f(x) || marked(reserved, x) || endpoint[static_cast<std::size_t>(x)])
                    continue;
                const RotationRecord r{v, w, x};
                const auto effect = state.classify(base, r);
                if (effect.kind != RotationKind::absorb) continue;
                const int child = static_cast<int>(tree.nodes.size());
                tree.nodes.push_back({id, tree.nodes[static_cast<std::size_t>(id)].root,
                                      tree.nodes[static_cast<std::size_t>(id)].level + 1, r, state.rotated(base, r)});
                endpoint[static_cast<std::size_t>(x)] = 1;
                res.kept.push_back(child);
                added = true;
                break;
            }
        }
        if (!added) ++res.discarded;
    }
    const double want = params.lengthen_min_fraction * static_cast<double>(leaves.size());
    res.status = !res.kept.empty() && static_cast<double>(res.kept.size()) >= want ? StepStatus::success
                                                                                   : StepStatus::soft_failure;
    res.exposures = oracle.exposed_count() - exposed_before;
    return res;
}

CloseResult close_cycle(const std::vector<CloseCandidate>& candidates, ExposureOracle& oracle, const Graph& g23,
                        const std::vector<char>& reserved, const Phase1Params& params) {
    CloseResult res;
    const std::size_t exposed_before = oracle.exposed_count();
    auto finish = [&](StepStatus s) {
        res.status = s;
        res.exposures = oracle.exposed_count() - exposed_before;
        return res;
    };
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        if (oracle.is_exposed_f(c.x)) continue;
        std::size_t open = 0;
        for (Vertex y : c.partners)
            if (!oracle.is_exposed_f(y)) ++open;
        if (open < params.close_min_partners || open == 0) continue;
        ++res.tried;
        const Vertex xg = oracle.expose_preimage(c.x);
        std::size_t used = 0;
        for (Vertex u : g23.neighbors(xg)) {
            if (used == params.close_neighbors) break;
            if (oracle.is_exposed_g(u)) continue;
            ++used;
            const Vertex y = oracle.expose_image(u);
            if (marked(reserved, y)) {
                ++res.reserved_hits;
                continue;
            }
            if (std::binary_search(c.partners.begin(), c.partners.end(), y)) {
                res.candidate = i;
                res.x = c.x;
                res.y = y;
                return finish(StepStatus::success);
            }
        }
    }
    return finish(StepStatus::soft_failure);
}

nlohmann::json RoundStats::to_json() const {
    return {{"attempt", attempt},
            {"u0", u0},
            {"v0", v0},
            {"status", std::string(to_string(status))},
            {"stage", stage},
            {"leaves_first", leaves_first},
            {"lengthened", lengthened},
            {"leaves_second", leaves_second},
            {"close_candidates", close_candidates},
            {"exposures", exposures},
            {"stage_exposures", stage_exposures},
            {"traversals", traversals},
            {"reserved_hits", reserved_hits},
            {"rotations", rotations},
            {"cycles_before", cycles_before},
            {"cycles_after", cycles_after}};
}

RoundOutcome run_round(const CycleCover& cover, Vertex u0, Vertex v0, RoundMode mode, const std::vector<char>& reserved,
                       ExposureOracle& oracle, const Graph& g23, const Phase1Params& params) {
    RoundOutcome out;
    auto& st = out.stats;
    st.u0 = u0;
    st.v0 = v0;
    st.cycles_before = cover.num_cycles();
    const std::size_t n = cover.num_vertices();
    const std::size_t exposed_before = oracle.exposed_count();
    auto fail = [&](StepStatus s, std::string stage) {
        st.status = s;
        st.stage = std::move(stage);
        st.exposures = oracle.exposed_count() - exposed_before;
        return out;
    };

    try {
        RoundBase base(cover, u0, v0);
        std::vector<char> first_reserved = reserved.empty() ? std::vector<char>(n, 0) : reserved;
        first_reserved[static_cast<std::size_t>(u0)] = 1;
        first_reserved[static_cast<std::size_t>(v0)] = 0;
        std::vector<char> rest_reserved = first_reserved;
        rest_reserved[static_cast<std::size_t>(u0)] = 0;
        const std::vector<char> none;

        // The second side's first traversal is done up front: if it is empty
        // the round ends having exposed only u0's neighbourhood.
        const TraverseResult probe =
            traverse(u0, base.near(), Avoid{rest_reserved, [u0](Vertex x) { return x == u0; }}, oracle, g23);
        ++st.traversals;
        if (probe.status == TraverseStatus::hard_failure) return fail(StepStatus::hard_failure, "probe");
        if (probe.status == TraverseStatus::empty) return fail(StepStatus::soft_failure, "probe");

        GrowResult g1 = grow_paths(base, {PathState::root(base)}, first_reserved, none, oracle, g23, params);
        st.traversals += g1.traversals;
        st.stage_exposures[0] = g1.exposures;
        st.leaves_first = g1.leaves[0].size();
        if (g1.status != StepStatus::success) return fail(g1.status, "grow-first");

        LengthenResult len = lengthen_paths(base, g1.tree, g1.leaves[0], rest_reserved, oracle, g23, params);
        st.lengthened = len.kept.size();
        st.stage_exposures[1] = len.exposures;
        st.reserved_hits += len.reserved_hits;
        if (len.status != StepStatus::success) return fail(len.status, "lengthen");

        std::vector<PathState> roots;
        std::vector<char> opposing(n, 0);
        for (int id : len.kept) {
            roots.push_back(g1.tree.nodes[static_cast<std::size_t>(id)].state.reversed(base));
            opposing[static_cast<std::size_t>(roots.back().fixed_end())] = 1;
        }
        GrowResult g2 = grow_paths(base, roots, rest_reserved, opposing, oracle, g23, params, &probe);
        st.traversals += g2.traversals;
        st.stage_exposures[2] = g2.exposures;
        if (g2.status == StepStatus::hard_failure) return fail(g2.status, "grow-second");

        // admissible leaves per root, then the fewest-cycles cutoff
        const std::size_t k = cover.num_cycles();
        std::vector<std::vector<int>> admissible(roots.size());
        std::vector<std::size_t> by_cycles;
        for (std::size_t r = 0; r < roots.size(); ++r) {
            for (int id : g2.leaves[r]) {
                const PathState& s = g2.tree.nodes[static_cast<std::size_t>(id)].state;
                const bool ok = mode == RoundMode::eliminate_short ? s.path_size() >= params.n0
                                                                   : s.num_cycles(base) + 2 <= k;
                if (!ok) continue;
                admissible[r].push_back(id);
                by_cycles.push_back(s.num_cycles(base));
            }
        }
        std::size_t cutoff = k;
        if (!by_cycles.empty()) {
            std::sort(by_cycles.begin(), by_cycles.end());
            const auto keep = static_cast<std::size_t>(
                std::ceil(params.close_pool_fraction * static_cast<double>(by_cycles.size())));
            cutoff = by_cycles[std::min(by_cycles.size(), std::max<std::size_t>(keep, 1)) - 1];
        }
        // partner vertex -> leaf node, per root
        std::vector<CloseCandidate> candidates;
        std::vector<std::vector<std::pair<Vertex, int>>> partner_nodes;
        std::vector<int> candidate_root;
        for (std::size_t r = 0; r < roots.size(); ++r) {
            std::vector<std::pair<Vertex, int>> pn;
            for (int id : admissible[r]) {
                const PathState& s = g2.tree.nodes[static_cast<std::size_t>(id)].state;
                if (s.num_cycles(base) <= cutoff) pn.emplace_back(s.free_end(), id);
            }
            st.leaves_second += pn.size();
            if (pn.empty()) continue;
            std::sort(pn.begin(), pn.end());
            CloseCandidate c;
            c.x = roots[r].fixed_end();
            for (const auto& [y, id] : pn) c.partners.push_back(y);
            candidates.push_back(std::move(c));
            partner_nodes.push_back(std::move(pn));
            candidate_root.push_back(static_cast<int>(r));
        }
        st.close_candidates = candidates.size();
        const CloseResult cl = close_cycle(candidates, oracle, g23, rest_reserved, params);
        st.stage_exposures[3] = cl.exposures;
        st.reserved_hits += cl.reserved_hits;
        if (cl.status != StepStatus::success) return fail(cl.status, "close");

        const auto& pn = partner_nodes[cl.candidate];
        const auto it = std::lower_bound(pn.begin(), pn.end(), std::make_pair(cl.y, -1));
        const int leaf = it->second;
        const int root = candidate_root[cl.candidate];

        NearTwoFactor near = base.near();
        out.first_side = g1.tree.history(len.kept[static_cast<std::size_t>(root)]);
        for (const auto& r : out.first_side) near.apply(r);
        near.swap_ends();
        out.second_side = g2.tree.history(leaf);
        for (const auto& r : out.second_side) near.apply(r);
        if (near.fixed_end() != cl.x || near.free_end() != cl.y)
            throw std::logic_error("run_round: replayed endpoints disagree with the exploration tree");
        out.cover = near.close();
        out.closing = Edge(cl.x, cl.y);
        st.rotations = out.first_side.size() + out.second_side.size();
        st.cycles_after = out.cover.num_cycles();
        st.status = StepStatus::success;
        st.exposures = oracle.exposed_count() - exposed_before;
        return out;
    } catch (const BudgetExhausted& e) {
        if (e.global()) throw;
        return fail(StepStatus::soft_failure, "round-cap");
    }
}

namespace {

struct CycleBook {
    std::vector<std::pair<Vertex, Vertex>> edges;  // reserved
    std::set<std::pair<Vertex, Vertex>> tried;
    std::size_t failures = 0;
};

}  // namespace

Phase1Result eliminate_short_cycles(const CycleCover& f, const Graph& g23, ExposureOracle& oracle,
                                    const Phase1Params& params, const TraceSink& trace) {
    params.validate();
    Phase1Result res;
    res.cover = f;
    const std::size_t n = f.num_vertices();
    const std::size_t exposed_before = oracle.exposed_count();
    std::vector<char> reserved(n, 0);
    std::map<Vertex, CycleBook> books;  // keyed by smallest cycle vertex

    auto reserve = [&](CycleBook& b, Vertex a, Vertex c) {
        b.edges.emplace_back(a, c);
        reserved[static_cast<std::size_t>(a)] = 1;
        reserved[static_cast<std::size_t>(c)] = 1;
    };
    for (int id = 0; id < static_cast<int>(f.num_cycles()); ++id) {
        if (f.cycle_length(id) >= params.n0) continue;
        const auto cyc = f.cycle_vertices(id);
        auto& b = books[cyc.front()];
        reserve(b, cyc[0], cyc[1]);
        if (cyc.size() >= 4) reserve(b, cyc[2], cyc[3]);
    }
    for (char c : reserved) res.reserved_initial += c ? 1 : 0;
    res.short_history.push_back(short_cycles(res.cover, params.n0));

    while (true) {
        // shortest short cycle first (few edges to retry on), fewest failures breaking ties
        int pick = -1;
        for (int id = 0; id < static_cast<int>(res.cover.num_cycles()); ++id) {
            if (res.cover.cycle_length(id) >= params.n0) continue;
            if (pick < 0) {
                pick = id;
                continue;
            }
            const auto len = res.cover.cycle_length(id), best_len = res.cover.cycle_length(pick);
            const auto fails = books[res.cover.cycle_start(id)].failures;
            const auto best_fails = books[res.cover.cycle_start(pick)].failures;
            if (len < best_len || (len == best_len && fails < best_fails)) pick = id;
        }
        if (pick < 0) break;
        const Vertex key = res.cover.cycle_start(pick);
        auto& book = books[key];
        if (book.failures >= params.cycle_retry_limit) {
            res.failure = "short cycle at vertex " + std::to_string(key) + " exceeded its retry limit";
            break;
        }

        std::vector<std::pair<Vertex, Vertex>> options;
        for (const auto& [a, c] : book.edges) {
            options.emplace_back(a, c);
            options.emplace_back(c, a);
        }
        const auto cyc = res.cover.cycle_vertices(pick);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Vertex a = cyc[i];
            const Vertex c = cyc[(i + 1) % cyc.size()];
            options.emplace_back(a, c);
            options.emplace_back(c, a);
        }
        std::pair<Vertex, Vertex> chosen{kNoVertex, kNoVertex};
        for (const auto& e : options) {
            if (book.tried.count(e) || oracle.is_exposed_f(e.first) || oracle.is_exposed_f(e.second)) continue;
            chosen = e;
            break;
        }
        if (chosen.first == kNoVertex) {
            res.failure = "no unexposed edge left on short cycle at vertex " + std::to_string(key);
            break;
        }
        book.tried.insert(chosen);
        if (!reserved[static_cast<std::size_t>(chosen.first)] || !reserved[static_cast<std::size_t>(chosen.second)])
            reserve(book, chosen.first, chosen.second);

        if (params.round_exposure_cap > 0) oracle.set_cap(oracle.exposed_count() + params.round_exposure_cap);
        RoundOutcome round;
        try {
            // the cycle's own spare reservations only matter if this round fails
            std::vector<char> others = reserved;
            for (const auto& [a, c] : book.edges) {
                others[static_cast<std::size_t>(a)] = 0;
                others[static_cast<std::size_t>(c)] = 0;
            }
            round = run_round(res.cover, chosen.first, chosen.second, RoundMode::eliminate_short, others, oracle, g23,
                              params);
        } catch (...) {
            oracle.clear_cap();
            throw;
        }
        oracle.clear_cap();
        round.stats.attempt = book.failures;
        res.rounds.push_back(round.stats);
        if (trace) {
            auto j = round.stats.to_json();
            j["event"] = "phase1-round";
            trace(j);
        }
        if (round.stats.status != StepStatus::success) {
            ++book.failures;
            ++res.failed_rounds;
            if (res.failed_rounds > params.retry_budget) {
                res.failure = "phase-1 retry budget exhausted";
                break;
            }
            continue;
        }

        auto before = res.short_history.back();
        auto after = short_cycles(round.cover, params.n0);
        const bool subset = std::includes(before.begin(), before.end(), after.begin(), after.end());
        if (!subset || after.size() >= before.size())
            throw std::logic_error("eliminate_short_cycles: accepted round did not shrink the short-cycle set");
        // release the reservations of every short cycle the round removed
        for (auto it = books.begin(); it != books.end();) {
            auto cyc = res.cover.cycle_vertices(res.cover.cycle_id(it->first));
            std::sort(cyc.begin(), cyc.end());
            const bool alive = std::binary_search(after.begin(), after.end(), cyc);
            if (alive) {
                ++it;
                continue;
            }
            for (const auto& [a, c] : it->second.edges) {
                reserved[static_cast<std::size_t>(a)] = 0;
                reserved[static_cast<std::size_t>(c)] = 0;
            }
            it = books.erase(it);
        }
        res.cover = std::move(round.cover);
        res.short_history.push_back(std::move(after));
        ++res.accepted_rounds;
        res.rotations += round.stats.rotations;
    }
    res.exposures = oracle.exposed_count() - exposed_before;
    res.success = res.failure.empty() && res.cover.min_cycle_length() >= params.n0;
    return res;
}

}  // namespace hamfactor
