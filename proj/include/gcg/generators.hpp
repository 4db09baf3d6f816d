#ifndef GCG_GENERATORS_HPP
#define GCG_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcg/graph.hpp"
#include "gcg/rng.hpp"

namespace gcg {

/// Raised when the configuration-model rejection loop exhausts its attempt cap.
struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& what, long attempts_)
        : std::runtime_error(what), attempts(attempts_) {}
    long attempts;
};

/// G(n,p): every one of the C(n,2) pairs is an edge independently with
/// probability p. Uses geometric skips over the lexicographic pair order,
/// so sparse graphs cost O(edges) draws.
inline Graph gen_gnp(int n, double p, RngSeed seed) {
    if (n < 1) throw std::invalid_argument("gen_gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must lie in [0,1]");
    std::vector<Edge> edges;
    if (p > 0.0) {
        const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        Rng rng(seed);
        if (p >= 1.0) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
        } else {
            const double log1mp = std::log1p(-p);
            std::uint64_t idx = 0;
            // skip = number of misses before the next edge, geometric(p)
            while (idx < total) {
                double u = rng.uniform();
                double fskip = std::floor(std::log1p(-u) / log1mp);
                if (fskip >= static_cast<double>(total - idx)) break;
                idx += static_cast<std::uint64_t>(fskip);
                if (idx >= total) break;
                // unrank pair index -> (row u, col v)
                std::uint64_t i = idx;
                int a = 0;
                std::uint64_t row = static_cast<std::uint64_t>(n) - 1;
                while (i >= row) {
                    i -= row;
                    --row;
                    ++a;
                }
                edges.push_back({a, a + 1 + static_cast<int>(i)});
                ++idx;
            }
        }
    }
    return Graph(n, std::move(edges));
}

namespace detail {

/// Projects a pairing of the d*n configuration points to an edge list;
/// returns false if the multigraph has a loop or repeated edge.
inline bool project_pairing(const std::vector<int>& points, int d, std::vector<Edge>& out) {
    out.clear();
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
        int u = points[i] / d, v = points[i + 1] / d;
        if (u == v) return false;
        out.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(out.begin(), out.end());
    return std::adjacent_find(out.begin(), out.end()) == out.end();
}

} // namespace detail

/// Configuration model: uniform pairing of the d*n points, projected to a
/// multigraph and redrawn until simple. Conditioned on simplicity the result
/// is uniform over simple d-regular graphs. Attempt cap 10*ceil(e^{2d^2}),
/// clamped to 1e6; `attempts_out`, when given, reports how many draws it took.
inline Graph gen_regular_config(int n, int d, RngSeed seed, long* attempts_out = nullptr) {
    if (n < 1 || d < 1) throw std::invalid_argument("gen_regular_config: n and d must be >= 1");
    if (d >= n) throw std::invalid_argument("gen_regular_config: need d < n");
    if ((static_cast<long long>(d) * n) % 2 != 0)
        throw std::invalid_argument("gen_regular_config: d*n must be even");

    long cap = 1000000;
    if (2.0 * d * d < std::log(1e5))
        cap = 10L * static_cast<long>(std::ceil(std::exp(2.0 * d * d)));

    Rng rng(seed);
    std::vector<int> points(static_cast<std::size_t>(d) * n);
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (long attempt = 1; attempt <= cap; ++attempt) {
        rng.shuffle(points);
        if (detail::project_pairing(points, d, edges)) {
            if (attempts_out) *attempts_out = attempt;
            return Graph(n, std::move(edges));
        }
    }
    throw GenerationError("gen_regular_config: rejection cap of " + std::to_string(cap) +
                              " attempts exceeded",
                          cap);
}

/// Hamilton cycle 0-1-...-(n-1)-0 plus a uniform random perfect matching,
/// redrawn whole until no chord repeats a cycle edge or pairs a vertex with
/// itself. Result is simple and 3-regular.
inline CubicModelGraph gen_cubic_cycle_matching(int n, RngSeed seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("gen_cubic_cycle_matching: n must be even and >= 4");
    Rng rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<Edge> chords;
    while (true) {
        rng.shuffle(perm);
        chords.clear();
        bool ok = true;
        for (int i = 0; i < n && ok; i += 2) {
            int u = perm[i], v = perm[i + 1];
            if (u > v) std::swap(u, v);
            int gap = v - u;
            if (gap == 1 || gap == n - 1) ok = false; // coincides with a cycle edge
            else chords.push_back({u, v});
        }
        if (ok) break;
    }
    std::sort(chords.begin(), chords.end());
    std::vector<Edge> edges = chords;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        edges.push_back({std::min(i, j), std::max(i, j)});
    }
    CubicModelGraph cm;
    cm.graph = Graph(n, std::move(edges));
    cm.cycle_order.resize(n);
    for (int i = 0; i < n; ++i) cm.cycle_order[i] = i;
    cm.matching = std::move(chords);
    return cm;
}

} // namespace gcg

#endif
