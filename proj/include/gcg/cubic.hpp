#ifndef GCG_CUBIC_HPP
#define GCG_CUBIC_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcg/graph.hpp"

namespace gcg {

// ---------------------------------------------------------------------------
// Distance-2 closeness and short/long paths.
// ---------------------------------------------------------------------------

/// Graph distance at most 2 (u == v counts as close).
inline bool close(const Graph& g, int u, int v) {
    if (u == v) return true;
    if (g.has_edge(u, v)) return true;
    auto a = g.neighbors(u), b = g.neighbors(v);
    // both sorted: linear merge intersection
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

/// A path is short when some vertex on it is close to both endpoints.
/// Throws if the vertex sequence is not a path in g.
inline bool is_short_path(const Graph& g, const std::vector<int>& path) {
    if (path.size() < 2) throw std::invalid_argument("is_short_path: need at least one edge");
    std::set<int> seen;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!seen.insert(path[i]).second)
            throw std::invalid_argument("is_short_path: repeated vertex");
        if (i > 0 && !g.has_edge(path[i - 1], path[i]))
            throw std::invalid_argument("is_short_path: consecutive vertices not adjacent");
    }
    const int u = path.front(), v = path.back();
    for (int w : path)
        if (close(g, w, u) && close(g, w, v)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Segment statistics on the cycle-plus-matching model.
// ---------------------------------------------------------------------------

/// Number of matching chords whose endpoints are at cycle distance <= m.
inline long long count_short_chords(const CubicModelGraph& cm, int m) {
    const int n = cm.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[cm.cycle_order[i]] = i;
    long long cnt = 0;
    for (auto [u, v] : cm.matching) {
        const int g = std::abs(pos[u] - pos[v]);
        if (std::min(g, n - g) <= m) ++cnt;
    }
    return cnt;
}

/// E(X) for X = twice the short-chord count.
inline double expected_short_chords(int n, int m) {
    return 2.0 * m * static_cast<double>(n) / (n - 1);
}

/// Good segments of m cycle edges: no chord with both endpoints strictly
/// inside. `selected` is the greedy clockwise family of vertex-disjoint good
/// segments (windows wrapping past position 0 are skipped), split into the
/// pairs P_j = (selected[j], selected[n1+j]).
struct SegmentCatalog {
    int m = 0;
    std::vector<int> good_starts; // circular window start positions
    std::vector<int> selected;    // ascending, non-wrapping, vertex-disjoint
    int n1 = 0;                   // number of segment pairs
    long long short_chords = 0;
    double x_statistic = 0; // X = 2 * short_chords
};

inline SegmentCatalog find_good_segments(const CubicModelGraph& cm, double c) {
    const int n = cm.n();
    if (!(c > 0 && c < 1)) throw std::invalid_argument("find_good_segments: c in (0,1)");
    SegmentCatalog cat;
    cat.m = static_cast<int>(std::floor(c * std::sqrt(static_cast<double>(n))));
    if (cat.m < 2) throw std::invalid_argument("find_good_segments: n too small for this c");
    const int m = cat.m;

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[cm.cycle_order[i]] = i;

    // a chord at forward gap g <= m-2 ruins the m-1-g windows whose interior
    // covers both endpoints
    std::vector<char> bad(n, 0);
    auto mark = [&](int p, int g) {
        // windows j with j+1 <= p and p+g <= j+m-1, circularly
        for (int j = p + g - (m - 1); j <= p - 1; ++j) bad[((j % n) + n) % n] = 1;
    };
    for (auto [u, v] : cm.matching) {
        const int p = pos[u], q = pos[v];
        const int fwd = ((q - p) % n + n) % n;
        if (fwd <= m - 2) mark(p, fwd);
        if (n - fwd <= m - 2) mark(q, n - fwd);
    }
    for (int j = 0; j < n; ++j)
        if (!bad[j]) cat.good_starts.push_back(j);

    int next = 0;
    for (int j : cat.good_starts) {
        if (j < next || j + m > n - 1) continue;
        cat.selected.push_back(j);
        next = j + m + 1;
    }
    if (cat.selected.size() % 2) cat.selected.pop_back();
    cat.n1 = static_cast<int>(cat.selected.size()) / 2;

    cat.short_chords = count_short_chords(cm, m);
    cat.x_statistic = 2.0 * static_cast<double>(cat.short_chords);
    return cat;
}

// ---------------------------------------------------------------------------
// The theta subgraph H: two branch vertices v, w joined by three internally
// disjoint even long paths.
// ---------------------------------------------------------------------------

struct HSubgraph {
    int v = -1, w = -1;
    std::array<std::vector<int>, 3> paths; // each from v to w inclusive
    std::array<Edge, 3> chords;
    int pair_index = -1;
    int seg_a = -1, seg_b = -1; // window start positions

    std::vector<int> vertices() const {
        std::vector<int> out;
        for (const auto& p : paths) out.insert(out.end(), p.begin(), p.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

struct HVerifyResult {
    bool ok = false;
    std::string reason;
};

/// Checks an H candidate from scratch against the raw graph: path validity
/// and internal disjointness, even and long paths, inducedness, and the
/// outside-attack property (no vertex outside H reaches two H vertices
/// within distance 2 through non-H intermediates). `forbidden` vertices must
/// not appear in H.
inline HVerifyResult verify_h(const CubicModelGraph& cm, const HSubgraph& h,
                              const std::vector<int>& forbidden = {}) {
    const Graph& g = cm.graph;
    auto fail = [](std::string r) { return HVerifyResult{false, std::move(r)}; };
    if (h.v < 0 || h.v >= g.n() || h.w < 0 || h.w >= g.n() || h.v == h.w)
        return fail("branch vertices invalid");

    std::vector<char> in_h(g.n(), 0);
    std::set<std::pair<int, int>> path_edges;
    std::set<int> internals;
    for (const auto& path : h.paths) {
        if (path.size() < 2 || path.front() != h.v || path.back() != h.w)
            return fail("path does not run from v to w");
        std::set<int> on_path;
        for (std::size_t i = 0; i < path.size(); ++i) {
            const int x = path[i];
            if (x < 0 || x >= g.n() || !on_path.insert(x).second)
                return fail("path repeats a vertex");
            if (i > 0) {
                if (!g.has_edge(path[i - 1], path[i]))
                    return fail("path uses a non-edge");
                path_edges.insert({std::min(path[i - 1], x), std::max(path[i - 1], x)});
            }
            in_h[x] = 1;
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (!internals.insert(path[i]).second || path[i] == h.v || path[i] == h.w)
                return fail("paths are not internally disjoint");
        if ((path.size() - 1) % 2) return fail("path has odd length");
        if (is_short_path(g, path)) return fail("path is short");
    }

    for (int x : forbidden)
        if (x >= 0 && x < g.n() && in_h[x]) return fail("H touches a forbidden vertex");

    // inducedness: every graph edge inside H must be a path edge
    std::vector<int> hv;
    for (int x = 0; x < g.n(); ++x)
        if (in_h[x]) hv.push_back(x);
    for (int x : hv)
        for (int u : g.neighbors(x))
            if (in_h[u] && x < u && !path_edges.count({x, u}))
                return fail("H is not induced");

    // outside attack: z outside H close to two H vertices via non-H routes
    std::set<int> candidates;
    for (int x : hv)
        for (int u : g.neighbors(x)) {
            if (!in_h[u]) candidates.insert(u);
            for (int z : g.neighbors(u))
                if (!in_h[z]) candidates.insert(z);
        }
    for (int z : candidates) {
        std::set<int> hits;
        for (int u : g.neighbors(z)) {
            if (in_h[u]) {
                hits.insert(u);
                continue;
            }
            for (int y : g.neighbors(u))
                if (in_h[y]) hits.insert(y);
        }
        if (hits.size() >= 2)
            return fail("outside vertex attacks two H vertices");
    }
    return {true, {}};
}

namespace detail {

// walk the cycle from position a to position b (inclusive), step +-1
inline void walk_cycle(const CubicModelGraph& cm, int a, int b, std::vector<int>& out) {
    const int step = b >= a ? 1 : -1;
    for (int i = a;; i += step) {
        out.push_back(cm.cycle_order[i]);
        if (i == b) break;
    }
}

} // namespace detail

/// Scans the segment pairs of `cat` for one whose cross chords form the
/// theta configuration with even long paths; every hit is re-checked with
/// verify_h before being returned.
inline std::optional<HSubgraph> find_h(const CubicModelGraph& cm, const SegmentCatalog& cat,
                                       const std::vector<int>& forbidden = {}) {
    const int n = cm.n();
    const int m = cat.m;
    std::vector<int> pos(n), partner(n, -1);
    for (int i = 0; i < n; ++i) pos[cm.cycle_order[i]] = i;
    for (auto [u, v] : cm.matching) {
        partner[u] = v;
        partner[v] = u;
    }
    std::vector<char> forb(n, 0);
    for (int x : forbidden)
        if (x >= 0 && x < n) forb[x] = 1;

    for (int j = 0; j < cat.n1; ++j) {
        const int sa = cat.selected[j], sb = cat.selected[cat.n1 + j];
        // cross chords between the two windows
        std::vector<std::pair<int, int>> cross; // (position in A, position in B)
        for (int i = sa; i <= sa + m; ++i) {
            const int q = partner[cm.cycle_order[i]];
            if (q >= 0 && pos[q] >= sb && pos[q] <= sb + m) cross.push_back({i, pos[q]});
        }
        if (cross.size() != 3) continue;

        for (int oa = 0; oa < 2 && true; ++oa) {
            for (int ob = 0; ob < 2; ++ob) {
                auto cps = cross;
                std::sort(cps.begin(), cps.end(), [&](auto& x, auto& y) {
                    return oa ? x.first > y.first : x.first < y.first;
                });
                std::vector<int> bs{cps[0].second, cps[1].second, cps[2].second};
                std::sort(bs.begin(), bs.end());
                if (ob) std::reverse(bs.begin(), bs.end());
                // required matching: a1-b3, a2-b1, a3-b2
                if (cps[0].second != bs[2] || cps[1].second != bs[0] || cps[2].second != bs[1])
                    continue;
                const int a1 = cps[0].first, a2 = cps[1].first, a3 = cps[2].first;
                const int b1 = bs[0 + 0], b2 = bs[1], b3 = bs[2];
                (void)b1;
                const int g1 = std::abs(a2 - a1), g2 = std::abs(a3 - a2);
                const int g3 = std::abs(b2 - cps[1].second), g4 = std::abs(b3 - b2);
                if (g1 < 5 || g2 < 5 || g3 < 5 || g4 < 5) continue;
                // path lengths must all be even
                if ((g1 + 1 + g4) % 2 || (1 + g3) % 2 || (g2 + 1) % 2) continue;
                const int v = cm.cycle_order[a2], w = cm.cycle_order[b2];
                if (cm.graph.has_edge(v, w)) continue;

                HSubgraph h;
                h.v = v;
                h.w = w;
                h.pair_index = j;
                h.seg_a = sa;
                h.seg_b = sb;
                // path 1: a2 .. a1, chord, b3 .. b2
                detail::walk_cycle(cm, a2, a1, h.paths[0]);
                detail::walk_cycle(cm, b3, b2, h.paths[0]);
                // path 2: a2, chord, b1 .. b2
                h.paths[1].push_back(v);
                detail::walk_cycle(cm, cps[1].second, b2, h.paths[1]);
                // path 3: a2 .. a3, chord, b2
                detail::walk_cycle(cm, a2, a3, h.paths[2]);
                h.paths[2].push_back(w);
                h.chords[0] = {std::min(cm.cycle_order[a1], cm.cycle_order[b3]),
                               std::max(cm.cycle_order[a1], cm.cycle_order[b3])};
                h.chords[1] = {std::min(v, cm.cycle_order[cps[1].second]),
                               std::max(v, cm.cycle_order[cps[1].second])};
                h.chords[2] = {std::min(cm.cycle_order[a3], w),
                               std::max(cm.cycle_order[a3], w)};

                bool touches_forbidden = false;
                for (int x : h.vertices()) touches_forbidden |= forb[x];
                if (touches_forbidden) continue;
                if (verify_h(cm, h, forbidden).ok) return h;
            }
        }
    }
    return std::nullopt;
}

inline std::optional<HSubgraph> find_h(const CubicModelGraph& cm, double c = 0.5,
                                       const std::vector<int>& forbidden = {}) {
    return find_h(cm, find_good_segments(cm, c), forbidden);
}

} // namespace gcg

#endif
