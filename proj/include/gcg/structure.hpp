#ifndef GCG_STRUCTURE_HPP
#define GCG_STRUCTURE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcg/graph.hpp"
#include "gcg/params.hpp"
#include "gcg/rng.hpp"

namespace gcg {

// ---------------------------------------------------------------------------
// Density scan: look for S with |S| <= sigma*n and e(S) >= theta*|S|.
// Exhaustive for small n; flow-based max-density plus peeling otherwise.
// ---------------------------------------------------------------------------

struct DensityScanResult {
    std::optional<std::vector<int>> witness;
    bool exact; // true if exhaustive, or if a witness certificate was found
};

namespace detail {

// Dinic max-flow on a small dense-ish network.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1) {}

    void add_edge(int u, int v, double cap, double rcap = 0.0) {
        edges_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({u, head_[v], rcap});
        head_[v] = static_cast<int>(edges_.size()) - 1;
    }

    double run(int s, int t) {
        double flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            double f;
            while ((f = dfs(s, t, std::numeric_limits<double>::max())) > 1e-12) flow += f;
        }
        return flow;
    }

    // after run(): vertices reachable from s in the residual network
    std::vector<char> min_cut_side(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e != -1; e = edges_[e].next)
                if (edges_[e].cap > 1e-9 && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = 1;
                    q.push(edges_[e].to);
                }
        }
        return seen;
    }

private:
    struct E {
        int to, next;
        double cap;
    };

    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e != -1; e = edges_[e].next)
                if (edges_[e].cap > 1e-9 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[u] + 1;
                    q.push(edges_[e].to);
                }
        }
        return level_[t] >= 0;
    }

    double dfs(int u, int t, double f) {
        if (u == t) return f;
        for (int& e = iter_[u]; e != -1; e = edges_[e].next) {
            E& ed = edges_[e];
            if (ed.cap > 1e-9 && level_[ed.to] == level_[u] + 1) {
                double d = dfs(ed.to, t, std::min(f, ed.cap));
                if (d > 1e-12) {
                    ed.cap -= d;
                    edges_[e ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_, level_, iter_;
    std::vector<E> edges_;
};

// Goldberg's max-density subgraph: densest S (no size constraint), or empty
// if the graph has no edges.
inline std::vector<int> densest_subgraph(const Graph& g) {
    const int n = g.n();
    const auto m = static_cast<double>(g.edge_count());
    if (m == 0) return {};
    double lo = 0, hi = m;
    std::vector<int> best;
    // densities are rationals with denominator <= n; stop below 1/n^2
    const double eps = 1.0 / (static_cast<double>(n) * n + 1);
    while (hi - lo > eps) {
        const double guess = (lo + hi) / 2;
        MaxFlow mf(n + 2);
        const int s = n, t = n + 1;
        for (int v = 0; v < n; ++v) {
            mf.add_edge(s, v, m);
            mf.add_edge(v, t, m + 2 * guess - g.degree(v));
        }
        for (auto [u, v] : g.edges()) mf.add_edge(u, v, 1.0, 1.0);
        mf.run(s, t);
        auto side = mf.min_cut_side(s);
        std::vector<int> S;
        for (int v = 0; v < n; ++v)
            if (side[v]) S.push_back(v);
        if (!S.empty()) {
            lo = guess;
            best = std::move(S);
        } else {
            hi = guess;
        }
    }
    return best;
}

inline long long edges_inside(const Graph& g, const std::vector<char>& in) {
    long long e = 0;
    for (auto [u, v] : g.edges())
        if (in[u] && in[v]) ++e;
    return e;
}

} // namespace detail

inline DensityScanResult density_scan(const Graph& g, double sigma, double theta) {
    if (!(sigma > 0 && sigma <= 1)) throw std::invalid_argument("density_scan: sigma in (0,1]");
    if (!(theta > 0)) throw std::invalid_argument("density_scan: theta > 0");
    const int n = g.n();
    const auto max_size = static_cast<long long>(std::floor(sigma * n + 1e-9));
    if (n <= 24) {
        // exhaustive: e(S) via popcount over adjacency masks
        std::vector<std::uint32_t> adj(n, 0);
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) adj[v] |= (1u << u);
        for (std::uint32_t S = 1; S < (1u << n); ++S) {
            const int size = std::popcount(S);
            if (size > max_size) continue;
            long long e = 0;
            for (std::uint32_t rest = S; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                e += std::popcount(adj[v] & S);
            }
            e /= 2;
            if (e >= theta * size) {
                std::vector<int> w;
                for (int v = 0; v < n; ++v)
                    if (S >> v & 1) w.push_back(v);
                return {w, true};
            }
        }
        return {std::nullopt, true};
    }
    // flow: exact max-density set, a certificate when it fits the size cap
    auto dense = detail::densest_subgraph(g);
    if (!dense.empty() && static_cast<long long>(dense.size()) <= max_size) {
        std::vector<char> in(n, 0);
        for (int v : dense) in[v] = 1;
        if (detail::edges_inside(g, in) >= theta * static_cast<double>(dense.size()))
            return {dense, true};
    }
    // peeling: strip minimum-degree vertices, test every suffix under the cap
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::set<std::pair<int, int>> pq;
    for (int v = 0; v < n; ++v) pq.insert({deg[v], v});
    long long edges_left = g.edge_count();
    std::vector<long long> suffix_edges(n + 1, 0);
    while (!pq.empty()) {
        auto [d, v] = *pq.begin();
        pq.erase(pq.begin());
        order.push_back(v);
        suffix_edges[order.size() - 1] = edges_left;
        removed[v] = 1;
        for (int u : g.neighbors(v))
            if (!removed[u]) {
                pq.erase({deg[u], u});
                --deg[u];
                --edges_left;
                pq.insert({deg[u], u});
            }
    }
    for (int i = 0; i < n; ++i) {
        const long long size = n - i;
        if (size > max_size || size == 0) continue;
        if (suffix_edges[i] >= theta * static_cast<double>(size)) {
            std::vector<int> w(order.begin() + i, order.end());
            std::sort(w.begin(), w.end());
            return {w, true};
        }
    }
    return {std::nullopt, false}; // heuristic "none": not a proof of absence
}

// ---------------------------------------------------------------------------
// Degree subset check: T = {v in S : d_S(v) >= Delta}, verdict |T| >= tau|S|.
// ---------------------------------------------------------------------------

struct DegreeSubsetResult {
    bool verdict;
    std::vector<int> T;
};

inline DegreeSubsetResult degree_subset_check(const Graph& g, const std::vector<int>& S,
                                              double delta, double tau) {
    std::vector<char> in(g.n(), 0);
    for (int v : S) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("degree_subset_check: bad vertex");
        in[v] = 1;
    }
    DegreeSubsetResult r;
    for (int v : S) {
        int d = 0;
        for (int u : g.neighbors(v)) d += in[u];
        if (d >= delta) r.T.push_back(v);
    }
    std::sort(r.T.begin(), r.T.end());
    r.verdict = static_cast<double>(r.T.size()) >= tau * static_cast<double>(S.size());
    return r;
}

// ---------------------------------------------------------------------------
// B(C) = { v outside all classes : a(v,C) < beta/2 }.
// ---------------------------------------------------------------------------

inline std::vector<int> availability_deficit(const Graph& g,
                                             const std::vector<std::vector<int>>& classes,
                                             double beta) {
    std::vector<int> cls(g.n(), -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (int v : classes[i]) {
            if (v < 0 || v >= g.n())
                throw std::invalid_argument("availability_deficit: bad vertex");
            if (cls[v] != -1)
                throw std::invalid_argument("availability_deficit: classes overlap");
            cls[v] = static_cast<int>(i);
        }
    const int k = static_cast<int>(classes.size());
    std::vector<int> B;
    std::vector<char> blocked(k);
    for (int v = 0; v < g.n(); ++v) {
        if (cls[v] != -1) continue;
        std::fill(blocked.begin(), blocked.end(), 0);
        for (int u : g.neighbors(v))
            if (cls[u] != -1) blocked[cls[u]] = 1;
        int a = 0;
        for (int i = 0; i < k; ++i) a += !blocked[i];
        if (a < beta / 2) B.push_back(v);
    }
    return B;
}

// ---------------------------------------------------------------------------
// Convexity bound: sum_i (1-p)^{|C_i|} >= k (1-p)^{avg}.
// ---------------------------------------------------------------------------

inline std::pair<double, double> convexity_bound(const std::vector<long long>& sizes, double p) {
    double sum = 0, total = 0;
    for (long long s : sizes) {
        if (s < 0) throw std::invalid_argument("convexity_bound: negative size");
        sum += std::pow(1.0 - p, static_cast<double>(s));
        total += static_cast<double>(s);
    }
    const auto k = static_cast<double>(sizes.size());
    const double rhs = k == 0 ? 0 : k * std::pow(1.0 - p, total / k);
    return {sum, rhs};
}

// ---------------------------------------------------------------------------
// Edge-span sampling against phi(s) = (5ps + ln n)s.
// ---------------------------------------------------------------------------

struct EdgeSpanResult {
    long long max_edges = 0;
    double phi = 0;
    bool violation = false;
};

inline EdgeSpanResult edge_span_check(const Graph& g, int s, int trials, double p,
                                      RngSeed seed = {}) {
    if (s < 0 || s > g.n()) throw std::invalid_argument("edge_span_check: bad subset size");
    EdgeSpanResult r;
    r.phi = (5.0 * p * s + std::log(static_cast<double>(std::max(g.n(), 2)))) * s;
    Rng rng(seed);
    std::vector<int> pool(g.n());
    for (int v = 0; v < g.n(); ++v) pool[v] = v;
    std::vector<char> in(g.n(), 0);
    for (int t = 0; t < trials; ++t) {
        // partial Fisher-Yates: first s entries form a uniform s-subset
        for (int i = 0; i < s; ++i) {
            const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n() - i)));
            std::swap(pool[i], pool[j]);
            in[pool[i]] = 1;
        }
        long long e = 0;
        for (int i = 0; i < s; ++i)
            for (int u : g.neighbors(pool[i])) e += in[u];
        e /= 2;
        r.max_edges = std::max(r.max_edges, e);
        for (int i = 0; i < s; ++i) in[pool[i]] = 0;
    }
    r.violation = static_cast<double>(r.max_edges) > r.phi;
    return r;
}

// ---------------------------------------------------------------------------
// Chernoff tail calculators (the three displayed binomial bounds).
// ---------------------------------------------------------------------------

inline double chernoff_lower(double n, double p, double eps) {
    if (!(eps >= 0 && eps <= 1)) throw std::invalid_argument("chernoff_lower: eps in [0,1]");
    return std::exp(-eps * eps * n * p / 2.0);
}

inline double chernoff_upper(double n, double p, double eps) {
    if (!(eps >= 0 && eps <= 1)) throw std::invalid_argument("chernoff_upper: eps in [0,1]");
    return std::exp(-eps * eps * n * p / 3.0);
}

inline double chernoff_heavy(double n, double p, double mu) {
    if (!(mu > std::exp(1.0))) throw std::invalid_argument("chernoff_heavy: mu > e required");
    return std::pow(std::exp(1.0) / mu, mu * n * p);
}

struct ChernoffBounds {
    double lower, upper, heavy;
};

inline ChernoffBounds chernoff_bounds(double n, double p, double eps, double mu) {
    return {chernoff_lower(n, p, eps), chernoff_upper(n, p, eps), chernoff_heavy(n, p, mu)};
}

// ---------------------------------------------------------------------------
// Endgame decomposition U_0 >= U_1 >= ... >= U_l with heavy/light labels.
// ---------------------------------------------------------------------------

enum class EdgeLabel { Heavy, Light, Internal, Other };

struct DecompositionError : std::runtime_error {
    DecompositionError(const std::string& what, std::string cap_)
        : std::runtime_error(what), cap(std::move(cap_)) {}
    std::string cap; // which growth cap was exceeded
};

struct DecompReport {
    bool complete = false; // labels cover exactly the U0-internal edges
    bool p1 = false, p2 = false, p3 = false, p4 = false, p5 = false;
    bool forest = false;
    bool all_p() const { return p1 && p2 && p3 && p4 && p5; }
    bool ok() const { return complete && all_p() && forest; }
};

struct Decomposition {
    std::vector<std::vector<int>> levels; // U_0 .. U_l, sorted ascending
    std::map<Edge, EdgeLabel> labels;     // every edge inside U_0
    // intermediates, retained for audit
    std::vector<int> u1a, u1b, setA, setB, a1, u1c, u2p;
    int ambiguous_light = 0; // level-0 light edges (endpoint in B), see README
    DecompReport report;

    std::vector<Edge> forest_edges() const {
        std::vector<Edge> out;
        for (const auto& [e, lab] : labels)
            if (lab == EdgeLabel::Light) out.push_back(e);
        return out;
    }
};

namespace detail {

// Closure growth: repeatedly absorb the lowest-id candidate with >= need
// neighbors in the growing set. Throws when more than cap vertices join.
inline void grow_set(const Graph& g, std::vector<char>& in_set,
                     const std::vector<char>& eligible, int need, long long cap,
                     const std::string& cap_name) {
    const int n = g.n();
    std::vector<int> cnt(n, 0);
    std::set<int> ready;
    for (int v = 0; v < n; ++v) {
        if (!eligible[v] || in_set[v]) continue;
        for (int u : g.neighbors(v)) cnt[v] += in_set[u];
        if (cnt[v] >= need) ready.insert(v);
    }
    long long added = 0;
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        if (++added > cap)
            throw DecompositionError("decomposition growth exceeded cap " + cap_name, cap_name);
        in_set[v] = 1;
        for (int u : g.neighbors(v)) {
            if (!eligible[u] || in_set[u]) continue;
            if (++cnt[u] == need) ready.insert(u);
        }
    }
}

inline std::vector<int> mask_to_sorted(const std::vector<char>& in) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(in.size()); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

// Label the U0-internal edges given the nested levels and the set B.
// Cross edges at depth >= 2 are light; level-0 cross edges are heavy unless
// the deep endpoint lies in B (the ambiguous corner -> light).
inline std::map<Edge, EdgeLabel> label_edges(const Graph& g, const std::vector<int>& lev,
                                             const std::vector<char>& inB, int ell,
                                             int* ambiguous = nullptr) {
    std::map<Edge, EdgeLabel> labels;
    for (auto [u, v] : g.edges()) {
        if (lev[u] < 0 || lev[v] < 0) continue;
        const int a = std::min(lev[u], lev[v]);
        const int b = std::max(lev[u], lev[v]);
        EdgeLabel lab;
        if (a == b) {
            lab = (a == ell) ? EdgeLabel::Internal : EdgeLabel::Other;
        } else if (a >= 1) {
            lab = EdgeLabel::Light;
        } else {
            const int deep = lev[u] > 0 ? u : v;
            lab = inB[deep] ? EdgeLabel::Light : EdgeLabel::Heavy;
            if (inB[deep] && ambiguous) ++*ambiguous;
        }
        labels.emplace(Edge{u, v}, lab);
    }
    return labels;
}

} // namespace detail

/// Constructs the chain per the endgame recipe: top-degree quota, the two
/// closure growths at level 0, then degree-threshold levels until the tail
/// is at most ln n (or the sets stop shrinking). Pads U0 toward 2*gamma*n
/// from `pad_pool` (lowest ids first) when a pool is supplied.
inline Decomposition build_decomposition(const Graph& g, std::vector<int> U0,
                                         const ParameterSet& ps,
                                         const std::vector<int>& pad_pool = {}) {
    const int n = g.n();
    const double target = 2.0 * ps.gamma * ps.n;
    if (static_cast<double>(U0.size()) > target + 1e-9)
        throw std::invalid_argument("build_decomposition: |U0| exceeds 2*gamma*n");
    std::vector<char> in0(n, 0);
    for (int v : U0) {
        if (v < 0 || v >= n) throw std::invalid_argument("build_decomposition: bad vertex");
        in0[v] = 1;
    }
    {
        std::vector<int> pool = pad_pool;
        std::sort(pool.begin(), pool.end());
        for (int v : pool) {
            if (static_cast<double>(U0.size()) + 1 > target + 1e-9) break;
            if (v < 0 || v >= n || in0[v]) continue;
            in0[v] = 1;
            U0.push_back(v);
        }
    }
    std::sort(U0.begin(), U0.end());

    Decomposition dec;

    // -- level 0 -> 1 --------------------------------------------------------
    const double theta = std::pow(ps.d, 1.0 / ps.alpha) * std::pow(std::log(ps.d), 3.0);
    const double tau = theta / ps.beta;
    const double big_deg = 2.0 * theta + ps.beta / 4.0;

    std::vector<int> deg0(n, 0);
    for (int v : U0)
        for (int u : g.neighbors(v)) deg0[v] += in0[u];

    // U_{1,a}: the 2*tau*gamma*n largest induced degrees (at least covering
    // every vertex with deg0 >= 2*theta + beta/4), ties by id
    std::size_t quota = static_cast<std::size_t>(std::ceil(2.0 * tau * ps.gamma * ps.n));
    std::size_t above = 0;
    for (int v : U0) above += deg0[v] >= big_deg;
    quota = std::min(std::max(quota, above), U0.size());
    {
        std::vector<int> order = U0;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return deg0[a] > deg0[b]; });
        dec.u1a.assign(order.begin(), order.begin() + static_cast<long>(quota));
        std::sort(dec.u1a.begin(), dec.u1a.end());
    }

    std::vector<char> cur(n, 0);
    for (int v : dec.u1a) cur[v] = 1;
    detail::grow_set(g, cur, in0, 3, 5LL * static_cast<long long>(dec.u1a.size()),
                     "r <= 5|U_{1,a}|");
    dec.u1b = detail::mask_to_sorted(cur);
    std::vector<char> in1b = cur;

    // A: outsiders with exactly two neighbors inside U_{1,b}
    for (int v : U0) {
        if (in1b[v]) continue;
        int c = 0;
        for (int u : g.neighbors(v)) c += in1b[u];
        if (c == 2) dec.setA.push_back(v);
    }
    std::vector<char> inA(n, 0);
    for (int v : dec.setA) inA[v] = 1;

    // B: members of U_{1,b} with more than beta/20 neighbors in A
    std::vector<char> inB(n, 0);
    for (int v : dec.u1b) {
        int c = 0;
        for (int u : g.neighbors(v)) c += inA[u];
        if (c > ps.beta / 20.0) {
            dec.setB.push_back(v);
            inB[v] = 1;
        }
    }

    // A1 = N(B) in U0; U_{1,c} = U_{1,b} union A1
    {
        std::vector<char> a1(n, 0);
        for (int v : dec.setB)
            for (int u : g.neighbors(v))
                if (in0[u]) a1[u] = 1;
        dec.a1 = detail::mask_to_sorted(a1);
        for (int v : dec.a1)
            if (!cur[v]) cur[v] = 1;
    }
    dec.u1c = detail::mask_to_sorted(cur);

    detail::grow_set(g, cur, in0, 2, 3LL * static_cast<long long>(dec.a1.size()),
                     "s <= 3|A_1|");
    dec.levels.push_back(U0);
    dec.levels.push_back(detail::mask_to_sorted(cur));

    // -- deeper levels -------------------------------------------------------
    const double log_n = std::log(static_cast<double>(std::max(n, 2)));
    const double deep_deg = 6.0 + ps.beta / 3.0;
    while (static_cast<double>(dec.levels.back().size()) > log_n) {
        const auto& Ui = dec.levels.back();
        std::vector<char> inUi(n, 0);
        for (int v : Ui) inUi[v] = 1;
        std::vector<char> next(n, 0);
        std::vector<int> prime;
        for (int v : Ui) {
            int c = 0;
            for (int u : g.neighbors(v)) c += inUi[u];
            if (c >= deep_deg) {
                next[v] = 1;
                prime.push_back(v);
            }
        }
        if (dec.levels.size() == 2) dec.u2p = prime;
        detail::grow_set(g, next, inUi, 2, 7LL * static_cast<long long>(prime.size()),
                         "r <= 7|U'|");
        auto lvl = detail::mask_to_sorted(next);
        const bool stable = lvl == Ui;
        dec.levels.push_back(std::move(lvl));
        if (stable) break; // degenerate: verification will flag P5
        if (dec.levels.size() > 64)
            throw DecompositionError("decomposition did not terminate", "levels");
    }

    // -- labels --------------------------------------------------------------
    std::vector<int> lev(n, -1);
    for (std::size_t i = 0; i < dec.levels.size(); ++i)
        for (int v : dec.levels[i]) lev[v] = static_cast<int>(i);
    dec.labels = detail::label_edges(g, lev, inB, static_cast<int>(dec.levels.size()) - 1,
                                     &dec.ambiguous_light);
    return dec;
}

/// Recomputes P1-P5 and forest-ness of F from the adjacency and the claimed
/// (levels, labels, B) alone; no builder bookkeeping is trusted.
inline DecompReport verify_decomposition(const Graph& g, const Decomposition& dec,
                                         const ParameterSet& ps) {
    DecompReport rep;
    const int n = g.n();
    if (dec.levels.empty()) return rep;
    const int ell = static_cast<int>(dec.levels.size()) - 1;

    std::vector<int> lev(n, -1);
    for (int i = 0; i <= ell; ++i) {
        std::vector<char> seen(n, 0);
        for (int v : dec.levels[i]) {
            if (v < 0 || v >= n || seen[v]) return rep;
            seen[v] = 1;
            if (lev[v] != i - 1) return rep; // levels must be nested
            lev[v] = i;
        }
    }

    // label map must cover exactly the edges inside U_0
    rep.complete = true;
    std::size_t edges_in_u0 = 0;
    for (auto [u, v] : g.edges()) {
        if (lev[u] < 0 || lev[v] < 0) continue;
        ++edges_in_u0;
        if (!dec.labels.count({u, v})) rep.complete = false;
    }
    if (dec.labels.size() != edges_in_u0) rep.complete = false;
    if (!rep.complete) return rep;

    auto label = [&](int u, int v) { return dec.labels.at({std::min(u, v), std::max(u, v)}); };

    // P1: at most one light neighbor one level down
    rep.p1 = true;
    for (int v = 0; v < n; ++v) {
        if (lev[v] < 0 || lev[v] >= ell) continue;
        int lights = 0;
        for (int u : g.neighbors(v))
            if (lev[u] > lev[v] && label(u, v) == EdgeLabel::Light) ++lights;
        if (lights > 1) rep.p1 = false;
    }

    // P2: all cross edges at depth >= 2 are light
    rep.p2 = true;
    for (auto [u, v] : g.edges()) {
        if (lev[u] < 0 || lev[v] < 0 || lev[u] == lev[v]) continue;
        if (std::min(lev[u], lev[v]) >= 1 && label(u, v) != EdgeLabel::Light) rep.p2 = false;
    }

    // P3: heavy degree into U_0 \ U_1 bounded by beta/10
    rep.p3 = true;
    for (int v = 0; v < n; ++v) {
        if (lev[v] < 1) continue;
        int heavies = 0;
        for (int u : g.neighbors(v))
            if (lev[u] == 0 && label(u, v) == EdgeLabel::Heavy) ++heavies;
        if (heavies > ps.beta / 10.0) rep.p3 = false;
    }

    // P4: induced degree within the vertex's deepest level at most beta/3
    rep.p4 = true;
    for (int v = 0; v < n; ++v) {
        if (lev[v] < 0) continue;
        int d = 0;
        for (int u : g.neighbors(v)) d += lev[u] >= lev[v];
        if (d > ps.beta / 3.0) rep.p4 = false;
    }

    // P5: U_l spans at most one cycle (cyclomatic number <= 1)
    {
        const auto& Ul = dec.levels[ell];
        std::vector<char> in(n, 0);
        for (int v : Ul) in[v] = 1;
        long long e = 0;
        for (auto [u, v] : g.edges()) e += in[u] && in[v];
        // components via DSU
        std::vector<int> parent(n, -1);
        for (int v : Ul) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        long long comps = static_cast<long long>(Ul.size());
        for (auto [u, v] : g.edges())
            if (in[u] && in[v]) {
                int a = find(u), b = find(v);
                if (a != b) {
                    parent[a] = b;
                    --comps;
                }
            }
        rep.p5 = e - static_cast<long long>(Ul.size()) + comps <= 1;
    }

    // forest-ness of F = (U_0, light edges)
    {
        std::vector<int> parent(n);
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        rep.forest = true;
        for (const auto& [e, lab] : dec.labels) {
            if (lab != EdgeLabel::Light) continue;
            int a = find(e.first), b = find(e.second);
            if (a == b) {
                rep.forest = false;
                break;
            }
            parent[a] = b;
        }
    }
    return rep;
}

/// Convenience: build then attach the verification report.
inline Decomposition build_and_verify(const Graph& g, std::vector<int> U0,
                                      const ParameterSet& ps,
                                      const std::vector<int>& pad_pool = {}) {
    Decomposition dec = build_decomposition(g, std::move(U0), ps, pad_pool);
    dec.report = verify_decomposition(g, dec, ps);
    return dec;
}

} // namespace gcg

#endif
