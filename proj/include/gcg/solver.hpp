#ifndef GCG_SOLVER_HPP
#define GCG_SOLVER_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcg/game.hpp"
#include "gcg/graph.hpp"

namespace gcg {

/// Exhaustive minimax on the coloring game, usable up to `size_cap` vertices.
/// Positions are memoized on a canonical key: the multiset of color-class
/// bitsets, which quotients out color permutations.
class ExactSolver {
public:
    explicit ExactSolver(int size_cap = 16) : size_cap_(size_cap) {}

    /// Winner under optimal play from the empty coloring.
    Player solve_winner(const Graph& g, int k, Player first = Player::Alice) {
        check_cap(g);
        if (k < 1) throw std::invalid_argument("solve_winner: k must be >= 1");
        g_ = &g;
        k_ = k;
        adj_.assign(g.n(), 0);
        for (int v = 0; v < g.n(); ++v)
            for (int u : g.neighbors(v)) adj_[v] |= bit(u);
        memo_.clear();
        std::vector<std::uint32_t> classes(k, 0);
        bool alice = alice_wins(classes, 0, first == Player::Alice);
        return alice ? Player::Alice : Player::Bob;
    }

    /// Smallest k for which Alice wins; scans upward from chi(g).
    int exact_chi_g(const Graph& g, Player first = Player::Alice) {
        check_cap(g);
        const int lo = chromatic_number(g);
        const int hi = g.max_degree() + 1;
        for (int k = lo; k <= hi; ++k)
            if (solve_winner(g, k, first) == Player::Alice) return k;
        return hi; // unreachable: k = Delta+1 is always an Alice win
    }

    /// Exact chromatic number via branch and bound (greedy clique lower
    /// bound, used-colors+1 branching).
    int chromatic_number(const Graph& g) {
        check_cap(g);
        const int n = g.n();
        if (n == 0) return 0;
        if (g.edge_count() == 0) return 1;
        // greedy clique on a max-degree vertex for the lower bound
        int lb = greedy_clique(g);
        int ub = greedy_coloring(g);
        for (int k = lb; k < ub; ++k)
            if (k_colorable(g, k)) return k;
        return ub;
    }

private:
    static std::uint32_t bit(int v) { return 1u << v; }

    void check_cap(const Graph& g) const {
        if (g.n() > size_cap_)
            throw std::invalid_argument("exact solver: graph exceeds size cap of " +
                                        std::to_string(size_cap_) + " vertices");
    }

    bool alice_wins(std::vector<std::uint32_t>& classes, std::uint32_t colored,
                    bool alice_to_move) {
        const int n = g_->n();
        // dead vertex => Bob has already won
        std::uint32_t uncolored = ~colored & ((n == 32) ? ~0u : (bit(n) - 1));
        for (std::uint32_t rest = uncolored; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int avail = 0;
            for (int c = 0; c < k_ && !avail; ++c)
                if (!(adj_[v] & classes[c])) avail = 1;
            if (!avail) return false;
        }
        if (!uncolored) return true;

        const std::string key = canonical_key(classes, alice_to_move);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        bool result = !alice_to_move;
        bool done = false;
        for (std::uint32_t rest = uncolored; rest && !done;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            bool tried_empty = false; // empty classes are interchangeable
            for (int c = 0; c < k_ && !done; ++c) {
                if (classes[c] == 0) {
                    if (tried_empty) continue;
                    tried_empty = true;
                }
                if (adj_[v] & classes[c]) continue;
                classes[c] |= bit(v);
                bool sub = alice_wins(classes, colored | bit(v), !alice_to_move);
                classes[c] &= ~bit(v);
                if (sub == alice_to_move) {
                    result = alice_to_move;
                    done = true;
                }
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    // Exact key (not a hash): sorted nonempty class masks + side to move. The
    // empty-class count is implied by k, so empties are dropped.
    std::string canonical_key(const std::vector<std::uint32_t>& classes, bool alice) {
        key_buf_.clear();
        for (std::uint32_t m : classes)
            if (m) key_buf_.push_back(m);
        std::sort(key_buf_.begin(), key_buf_.end());
        std::string key;
        key.reserve(key_buf_.size() * 4 + 1);
        key.push_back(alice ? 'A' : 'B');
        for (std::uint32_t m : key_buf_)
            for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((m >> (8 * b)) & 0xFF));
        return key;
    }

    static int greedy_clique(const Graph& g) {
        int best = 1;
        for (int s = 0; s < g.n(); ++s) {
            std::vector<int> clique{s};
            for (int v : g.neighbors(s)) {
                bool ok = true;
                for (int c : clique)
                    if (!g.has_edge(v, c)) { ok = false; break; }
                if (ok) clique.push_back(v);
            }
            best = std::max(best, static_cast<int>(clique.size()));
        }
        return best;
    }

    static int greedy_coloring(const Graph& g) {
        std::vector<int> col(g.n(), 0);
        int used = 0;
        for (int v = 0; v < g.n(); ++v) {
            std::uint32_t taken = 0;
            for (int u : g.neighbors(v))
                if (col[u]) taken |= bit(col[u] - 1);
            int c = std::countr_one(taken) + 1;
            col[v] = c;
            used = std::max(used, c);
        }
        return used;
    }

    static bool k_colorable(const Graph& g, int k) {
        std::vector<int> order(g.n());
        for (int i = 0; i < g.n(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> col(g.n(), 0);
        return color_rec(g, order, col, 0, k, 0);
    }

    static bool color_rec(const Graph& g, const std::vector<int>& order, std::vector<int>& col,
                          std::size_t idx, int k, int used) {
        if (idx == order.size()) return true;
        int v = order[idx];
        std::uint32_t taken = 0;
        for (int u : g.neighbors(v))
            if (col[u]) taken |= bit(col[u] - 1);
        const int limit = std::min(k, used + 1); // fresh colors are symmetric
        for (int c = 1; c <= limit; ++c) {
            if (taken & bit(c - 1)) continue;
            col[v] = c;
            if (color_rec(g, order, col, idx + 1, k, std::max(used, c))) return true;
            col[v] = 0;
        }
        return false;
    }

    int size_cap_;
    const Graph* g_ = nullptr;
    int k_ = 0;
    std::vector<std::uint32_t> adj_;
    std::vector<std::uint32_t> key_buf_;
    std::unordered_map<std::string, bool> memo_;
};

} // namespace gcg

#endif
