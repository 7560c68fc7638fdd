#pragma once

#include <cstddef>
#include <vector>

#include "hamfactor/graph.hpp"

namespace hamfactor {

// Colour per edge, aligned with Graph::edges() order.
struct EdgeColoring {
    std::vector<Edge> edges;
    std::vector<int> color;
    int num_colors = 0;

    std::vector<std::size_t> class_sizes() const;
    // Proper (no two edges at a vertex share a colour) and every colour in [0, num_colors).
    bool is_proper(const Graph& g) const;
};

// Proper edge colouring with at most max_degree + 1 colours, built with the
// fan / alternating-path recolouring procedure of Misra and Gries.
EdgeColoring vizing_color(const Graph& g);

// For d = 2 returns g. For d >= 3 returns the union of the three largest
// colour classes (ties towards the lower class index); every vertex then has
// degree 2 or 3. Throws std::invalid_argument if g is not d-regular with d >= 2
// or the colouring is not proper with at most d + 1 classes.
Graph extract_two_three(const Graph& g, const EdgeColoring& coloring);

}  // namespace hamfactor
