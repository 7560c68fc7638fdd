#include "hamfactor/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hamfactor {

std::vector<std::size_t> EdgeColoring::class_sizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(std::max(num_colors, 0)), 0);
    for (int c : color) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
}

bool EdgeColoring::is_proper(const Graph& g) const {
    if (edges.size() != color.size() || edges.size() != g.num_edges()) return false;
    std::vector<std::vector<char>> used(g.num_vertices(), std::vector<char>(static_cast<std::size_t>(num_colors), 0));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int c = color[i];
        if (c < 0 || c >= num_colors || !g.has_edge(edges[i].u, edges[i].v)) return false;
        for (Vertex end : {edges[i].u, edges[i].v}) {
            auto& slot = used[static_cast<std::size_t>(end)][static_cast<std::size_t>(c)];
            if (slot) return false;
            slot = 1;
        }
    }
    return true;
}

namespace {

class MisraGries {
public:
    explicit MisraGries(const Graph& g)
        : g_(g),
          palette_(static_cast<int>(g.max_degree()) + 1),
          at_(g.num_vertices(), std::vector<Vertex>(static_cast<std::size_t>(palette_), kNoVertex)),
          in_fan_(g.num_vertices(), 0) {}

    void color_all() {
        for (const Edge& e : g_.edges()) color_edge(e.u, e.v);
    }

    int color_of(Vertex u, Vertex v) const {
        const auto& row = at_[static_cast<std::size_t>(u)];
        for (int c = 0; c < palette_; ++c) {
            if (row[static_cast<std::size_t>(c)] == v) return c;
        }
        return -1;
    }

    int palette() const { return palette_; }

private:
    bool is_free(Vertex v, int c) const {
        return at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] == kNoVertex;
    }

    int free_color(Vertex v) const {
        for (int c = 0; c < palette_; ++c) {
            if (is_free(v, c)) return c;
        }
        throw std::logic_error("no free colour");
    }

    void set(Vertex u, Vertex v, int c) {
        at_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] = v;
        at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = u;
    }

    void unset(Vertex u, Vertex v, int c) {
        at_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] = kNoVertex;
        at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = kNoVertex;
    }

    void color_edge(Vertex u, Vertex v) {
        // Maximal fan at u starting with the uncoloured edge {u, v}.
        std::vector<Vertex> fan{v};
        in_fan_[static_cast<std::size_t>(v)] = 1;
        for (bool grew = true; grew;) {
            grew = false;
            const Vertex last = fan.back();
            for (int c = 0; c < palette_; ++c) {
                if (!is_free(last, c)) continue;
                Vertex w = at_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)];
                if (w != kNoVertex && !in_fan_[static_cast<std::size_t>(w)]) {
                    fan.push_back(w);
                    in_fan_[static_cast<std::size_t>(w)] = 1;
                    grew = true;
                    break;
                }
            }
        }
        for (Vertex f : fan) in_fan_[static_cast<std::size_t>(f)] = 0;

        const int c = free_color(u);
        const int d = free_color(fan.back());

        // Swap c and d along the alternating path leaving u on colour d.
        if (c != d) {
            std::vector<std::pair<Vertex, Vertex>> path_edges;
            std::vector<int> path_colors;
            Vertex x = u;
            int col = d;
            for (Vertex y; (y = at_[static_cast<std::size_t>(x)][static_cast<std::size_t>(col)]) != kNoVertex;) {
                path_edges.emplace_back(x, y);
                path_colors.push_back(col);
                x = y;
                col = (col == d) ? c : d;
            }
            for (std::size_t i = 0; i < path_edges.size(); ++i) {
                unset(path_edges[i].first, path_edges[i].second, path_colors[i]);
            }
            for (std::size_t i = 0; i < path_edges.size(); ++i) {
                set(path_edges[i].first, path_edges[i].second, path_colors[i] == d ? c : d);
            }
        }

        // First fan prefix that is still a fan and ends at a vertex missing d.
        std::size_t pick = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                const int ci = color_of(u, fan[i]);
                if (ci < 0 || !is_free(fan[i - 1], ci)) break;
            }
            if (is_free(fan[i], d)) {
                pick = i;
                break;
            }
        }
        if (pick == fan.size()) throw std::logic_error("Misra-Gries: no admissible fan prefix");

        std::vector<int> shifted(pick);
        for (std::size_t j = 0; j < pick; ++j) shifted[j] = color_of(u, fan[j + 1]);
        for (std::size_t j = 0; j < pick; ++j) unset(u, fan[j + 1], shifted[j]);
        for (std::size_t j = 0; j < pick; ++j) set(u, fan[j], shifted[j]);
        set(u, fan[pick], d);
    }

    const Graph& g_;
    int palette_;
    std::vector<std::vector<Vertex>> at_;
    std::vector<char> in_fan_;
};

}  // namespace

EdgeColoring vizing_color(const Graph& g) {
    EdgeColoring out;
    out.edges = g.edges();
    if (out.edges.empty()) return out;
    MisraGries mg(g);
    mg.color_all();
    out.color.reserve(out.edges.size());
    int used = 0;
    for (const Edge& e : out.edges) {
        const int c = mg.color_of(e.u, e.v);
        if (c < 0) throw std::logic_error("Misra-Gries left an edge uncoloured");
        out.color.push_back(c);
        used = std::max(used, c + 1);
    }
    out.num_colors = used;
    return out;
}

Graph extract_two_three(const Graph& g, const EdgeColoring& coloring) {
    const std::size_t d = g.max_degree();
    if (!g.is_regular(d) || d < 2) throw std::invalid_argument("extract_two_three needs a d-regular graph with d >= 2");
    if (!coloring.is_proper(g) || coloring.num_colors > static_cast<int>(d) + 1) {
        throw std::invalid_argument("extract_two_three needs a proper colouring with at most d+1 classes");
    }
    if (d == 2) return g;
    const auto sizes = coloring.class_sizes();
    std::vector<int> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)];
    });
    std::vector<char> keep(sizes.size(), 0);
    for (std::size_t i = 0; i < 3 && i < order.size(); ++i) keep[static_cast<std::size_t>(order[i])] = 1;
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < coloring.edges.size(); ++i) {
        if (keep[static_cast<std::size_t>(coloring.color[i])]) kept.push_back(coloring.edges[i]);
    }
    return Graph(g.num_vertices(), kept);
}

}  // namespace hamfactor
