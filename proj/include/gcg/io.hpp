#ifndef GCG_IO_HPP
#define GCG_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gcg/graph.hpp"

namespace gcg {

/// Parse failure carrying the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ")"), line(line_) {}
    int line;
};

// Graph file format: first line "n m", then m lines "u v" with u < v in
// ascending lexicographic order. A CubicModelGraph appends a trailer:
//   cycle v0 v1 ... v{n-1}
//   matching k
//   u v          (k lines, ascending)

inline void write_graph(std::ostream& os, const Graph& g) {
    os << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline void write_cubic(std::ostream& os, const CubicModelGraph& cm) {
    write_graph(os, cm.graph);
    os << "cycle";
    for (int v : cm.cycle_order) os << ' ' << v;
    os << '\n';
    os << "matching " << cm.matching.size() << '\n';
    for (auto [u, v] : cm.matching) os << u << ' ' << v << '\n';
}

inline Graph read_graph(std::istream& is, int* lines_consumed = nullptr) {
    int line = 1;
    std::string s;
    if (!std::getline(is, s)) throw ParseError("empty graph file", line);
    std::istringstream head(s);
    long long n, m;
    if (!(head >> n >> m) || n < 0 || m < 0) throw ParseError("expected header 'n m'", line);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    Edge prev{-1, -1};
    for (long long i = 0; i < m; ++i) {
        ++line;
        if (!std::getline(is, s)) throw ParseError("unexpected end of file, expected edge", line);
        std::istringstream es(s);
        int u, v;
        if (!(es >> u >> v)) throw ParseError("expected edge 'u v'", line);
        if (u >= v) throw ParseError("edge must satisfy u < v", line);
        Edge e{u, v};
        if (!(prev < e)) throw ParseError("edges must be in ascending lexicographic order", line);
        prev = e;
        edges.push_back(e);
    }
    if (lines_consumed) *lines_consumed = line;
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line);
    }
}

inline CubicModelGraph read_cubic(std::istream& is) {
    int line = 0;
    CubicModelGraph cm;
    cm.graph = read_graph(is, &line);
    std::string s, word;
    ++line;
    if (!std::getline(is, s)) throw ParseError("expected 'cycle' trailer", line);
    std::istringstream cs(s);
    if (!(cs >> word) || word != "cycle") throw ParseError("expected 'cycle' trailer", line);
    cm.cycle_order.reserve(cm.graph.n());
    int v;
    while (cs >> v) cm.cycle_order.push_back(v);
    if (static_cast<int>(cm.cycle_order.size()) != cm.graph.n())
        throw ParseError("cycle trailer must list all vertices", line);
    ++line;
    if (!std::getline(is, s)) throw ParseError("expected 'matching k' trailer", line);
    std::istringstream ms(s);
    long long k;
    if (!(ms >> word >> k) || word != "matching" || k < 0)
        throw ParseError("expected 'matching k' trailer", line);
    for (long long i = 0; i < k; ++i) {
        ++line;
        if (!std::getline(is, s)) throw ParseError("unexpected end of matching trailer", line);
        std::istringstream es(s);
        int a, b;
        if (!(es >> a >> b) || a >= b) throw ParseError("expected matching pair 'u v', u < v", line);
        cm.matching.push_back({a, b});
    }
    return cm;
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(f);
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    write_graph(f, g);
}

/// Byte-for-byte serialization used by the determinism tests.
inline std::string to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

} // namespace gcg

#endif
