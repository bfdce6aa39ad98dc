#include "wheels/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace wheels {

namespace {

long long parse_int(const std::string& tok, int line_no, const char* what) {
    long long val = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), val);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw parse_error(line_no, std::string("expected an integer ") + what +
                                       ", got '" + tok + "'");
    return val;
}

// Splits a line into tokens; returns false for blank and comment lines.
bool significant(const std::string& line, std::vector<std::string>& toks) {
    toks.clear();
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return !toks.empty() && toks[0][0] != '#';
}

}  // namespace

graph read_edge_list(std::istream& in) {
    std::string line;
    std::vector<std::string> toks;
    int line_no = 0;

    long long n = -1, m = -1;
    int header_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line, toks)) continue;
        if (toks.size() != 2)
            throw parse_error(line_no,
                              "header must be exactly two integers: vertex "
                              "count and edge count");
        n = parse_int(toks[0], line_no, "vertex count");
        m = parse_int(toks[1], line_no, "edge count");
        header_line = line_no;
        break;
    }
    if (header_line == 0)
        throw parse_error(line_no + 1, "missing header line");
    if (n < 0)
        throw parse_error(header_line, "vertex count must be non-negative");
    if (m < 0)
        throw parse_error(header_line, "edge count must be non-negative");

    graph g;
    std::set<std::pair<vertex_id, vertex_id>> seen;
    long long edges_read = 0;
    while (edges_read < m && std::getline(in, line)) {
        ++line_no;
        if (!significant(line, toks)) continue;
        if (toks.size() != 2)
            throw parse_error(line_no,
                              "edge line must be exactly two integers");
        long long u = parse_int(toks[0], line_no, "edge endpoint");
        long long v = parse_int(toks[1], line_no, "edge endpoint");
        if (u < 0 || v < 0)
            throw parse_error(line_no, "vertex ids must be non-negative");
        if (u > std::numeric_limits<int>::max() ||
            v > std::numeric_limits<int>::max())
            throw parse_error(line_no, "vertex id out of range");
        if (u == v)
            throw parse_error(line_no,
                              "self-loop " + std::to_string(u) + "-" +
                                  std::to_string(v) + " is not allowed");
        if (u > v)
            throw parse_error(
                line_no, "edge endpoints must be in increasing order");
        auto uv = std::make_pair(static_cast<vertex_id>(u),
                                 static_cast<vertex_id>(v));
        if (!seen.insert(uv).second)
            throw parse_error(line_no, "duplicate edge " + std::to_string(u) +
                                           "-" + std::to_string(v));
        if (!g.has_vertex(uv.first)) g.add_vertex(uv.first);
        if (!g.has_vertex(uv.second)) g.add_vertex(uv.second);
        g.add_edge(uv.first, uv.second);
        ++edges_read;
    }
    if (edges_read < m)
        throw parse_error(line_no + 1, "unexpected end of input: expected " +
                                           std::to_string(m) +
                                           " edge lines, found " +
                                           std::to_string(edges_read));
    while (std::getline(in, line)) {
        ++line_no;
        if (significant(line, toks))
            throw parse_error(line_no,
                              "unexpected content after the declared edges");
    }
    if (static_cast<long long>(g.vertex_count()) != n)
        throw parse_error(header_line,
                          "header declares " + std::to_string(n) +
                              " vertices but the edges reference " +
                              std::to_string(g.vertex_count()));
    return g;
}

graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    try {
        return read_edge_list(f);
    } catch (const parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_edge_list(std::ostream& os, const graph& g) {
    for (const auto& [v, nbrs] : g.adjacency())
        if (nbrs.empty())
            throw std::invalid_argument(
                "write_edge_list: vertex " + std::to_string(v) +
                " is isolated; the edge-list format cannot represent it");
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

std::string to_edge_list(const graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

std::string to_dot(const graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (const auto& [v, nbrs] : g.adjacency())
        if (nbrs.empty()) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace wheels
