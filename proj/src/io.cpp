#include "hamfactor/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace hamfactor {
namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError(lineno + 1, "missing header \"n m\"");
    long long n = -1;
    long long m = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0) {
            throw ParseError(lineno, "malformed header, expected \"n m\"");
        }
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::set<Edge> seen;
    while (next_content_line(in, line, lineno)) {
        std::istringstream ls(line);
        long long u = -1;
        long long v = -1;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra)) throw ParseError(lineno, "expected \"u v\"");
        if (u < 0 || v >= n || u >= v) throw ParseError(lineno, "edge must satisfy 0 <= u < v < n");
        Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        if (static_cast<long long>(edges.size()) == m) {
            throw ParseError(lineno, "more edge lines than the declared m = " + std::to_string(m));
        }
        edges.push_back(e);
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError(lineno, "declared m = " + std::to_string(m) + " but found " + std::to_string(edges.size()) +
                                     " edge lines");
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file " + path.string());
    try {
        return read_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path.string() + ": " + e.detail());
    }
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file " + path.string());
    write_edge_list(out, g);
}

HamCycle read_cycle(std::istream& in) {
    HamCycle h;
    long long v = 0;
    while (in >> v) h.order.push_back(static_cast<Vertex>(v));
    if (!in.eof()) throw std::runtime_error("malformed cycle file");
    return h;
}

}  // namespace hamfactor
