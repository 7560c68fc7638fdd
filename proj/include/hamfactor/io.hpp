#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hamfactor/graph.hpp"
#include "hamfactor/verify.hpp"

namespace hamfactor {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}
    std::size_t line() const { return line_; }
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

// Edge-list format: "n m" on the first line, then m lines "u v" with 0 <= u < v < n.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);

// A cycle file lists the vertex order, whitespace separated.
HamCycle read_cycle(std::istream& in);

}  // namespace hamfactor
