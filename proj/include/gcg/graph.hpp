#ifndef GCG_GRAPH_HPP
#define GCG_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcg {

using Edge = std::pair<int, int>; // stored with first < second

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency lists are sorted ascending; safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Throws on loops, duplicates, or
    /// out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("Graph: self-loop at " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("Graph: duplicate edge");
        edges_ = std::move(edges);
        build_adjacency();
    }

    int n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const {
        return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
    }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    int max_degree() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
        return m;
    }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        auto ns = neighbors(u);
        return std::binary_search(ns.begin(), ns.end(), v);
    }

private:
    void build_adjacency() {
        offsets_.assign(n_ + 1, 0);
        for (auto [u, v] : edges_) {
            ++offsets_[u + 1];
            ++offsets_[v + 1];
        }
        for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
        nbrs_.resize(2 * edges_.size());
        std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
        for (auto [u, v] : edges_) {
            nbrs_[cursor[u]++] = v;
            nbrs_[cursor[v]++] = u;
        }
        for (int v = 0; v < n_; ++v)
            std::sort(nbrs_.begin() + offsets_[v], nbrs_.begin() + offsets_[v + 1]);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_{0};
    std::vector<int> nbrs_;
};

/// Cubic graph sampled as a Hamilton cycle plus a random perfect matching.
/// Keeps the cycle order and the chord list alongside the flat graph.
struct CubicModelGraph {
    Graph graph;
    std::vector<int> cycle_order;     // cycle is cycle_order[i] - cycle_order[i+1 mod n]
    std::vector<Edge> matching;       // the chords, u < v

    int n() const { return graph.n(); }
};

/// |adj(v) ∩ S| for v ∈ S. Throws if v is not a member of S.
inline int induced_degree(const Graph& g, const std::vector<int>& s, int v) {
    std::vector<char> in(g.n(), 0);
    bool member = false;
    for (int x : s) {
        if (x < 0 || x >= g.n()) throw std::invalid_argument("induced_degree: vertex out of range");
        in[x] = 1;
        if (x == v) member = true;
    }
    if (!member) throw std::invalid_argument("induced_degree: v not in S");
    int d = 0;
    for (int u : g.neighbors(v)) d += in[u];
    return d;
}

/// Membership-mask variant used by the structure analyzers on hot paths.
inline int induced_degree(const Graph& g, const std::vector<char>& mask, int v) {
    int d = 0;
    for (int u : g.neighbors(v)) d += mask[u];
    return d;
}

} // namespace gcg

#endif
