#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "gcg/generators.hpp"
#include "gcg/solver.hpp"

using namespace gcg;

namespace {

/// Independent minimax oracle: memoizes on the exact color assignment (no
/// canonicalization at all), so any symmetry bug in the main solver shows up
/// as a disagreement. Usable up to ~8 vertices.
class PlainSolver {
public:
    Player winner(const Graph& g, int k, Player first) {
        g_ = &g;
        k_ = k;
        memo_.clear();
        std::vector<int> col(g.n(), 0);
        return alice_wins(col, first == Player::Alice) ? Player::Alice : Player::Bob;
    }

private:
    bool alice_wins(std::vector<int>& col, bool alice) {
        for (int v = 0; v < g_->n(); ++v) {
            if (col[v]) continue;
            bool any = false;
            for (int c = 1; c <= k_ && !any; ++c) any = legal(col, v, c);
            if (!any) return false;
        }
        bool all = true;
        for (int v = 0; v < g_->n(); ++v) all &= col[v] != 0;
        if (all) return true;
        auto key = std::make_pair(col, alice);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result = !alice;
        for (int v = 0; v < g_->n() && result != alice; ++v) {
            if (col[v]) continue;
            for (int c = 1; c <= k_ && result != alice; ++c) {
                if (!legal(col, v, c)) continue;
                col[v] = c;
                if (alice_wins(col, !alice) == alice) result = alice;
                col[v] = 0;
            }
        }
        memo_[key] = result;
        return result;
    }

    bool legal(const std::vector<int>& col, int v, int c) const {
        for (int u : g_->neighbors(v))
            if (col[u] == c) return false;
        return true;
    }

    const Graph* g_ = nullptr;
    int k_ = 0;
    std::map<std::pair<std::vector<int>, bool>, bool> memo_;
};

} // namespace

TEST_CASE("chromatic number on known graphs") {
    ExactSolver s;
    CHECK(s.chromatic_number(Graph(1, {})) == 1);
    CHECK(s.chromatic_number(Graph(5, {})) == 1);
    CHECK(s.chromatic_number(Graph(2, {{0, 1}})) == 2);
    CHECK(s.chromatic_number(Graph(3, {{0, 1}, {0, 2}, {1, 2}})) == 3);
    CHECK(s.chromatic_number(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == 2); // C4
    CHECK(s.chromatic_number(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) == 3); // C5
    Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(s.chromatic_number(k5) == 5);
    // Petersen graph: chromatic number 3
    Graph pet(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                   {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(s.chromatic_number(pet) == 3);
}

TEST_CASE("game chromatic number of small named graphs") {
    ExactSolver s;
    // P4: Alice cannot win with 2 colors (Bob colors the far end in the other
    // color), but wins with 3
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(s.solve_winner(p4, 2) == Player::Bob);
    CHECK(s.solve_winner(p4, 3) == Player::Alice);
    CHECK(s.exact_chi_g(p4) == 3);

    // complete graphs: chi_g = n
    for (int n = 2; n <= 5; ++n) {
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) e.push_back({u, v});
        CHECK(s.exact_chi_g(Graph(n, e)) == n);
    }

    // stars: Alice colors the centre first, two colors always suffice
    Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(s.exact_chi_g(star) == 2);

    // C4: Bob colors the opposite vertex in the other color
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(s.solve_winner(c4, 2) == Player::Bob);
    CHECK(s.exact_chi_g(c4) == 3);

    // empty graph: one color
    CHECK(s.exact_chi_g(Graph(4, {})) == 1);
}

TEST_CASE("chi_g is sandwiched between chi and max degree plus one") {
    ExactSolver s;
    for (int seed = 0; seed < 30; ++seed) {
        Graph g = gen_gnp(9, 0.4, {201, (std::uint64_t)seed});
        int chi = s.chromatic_number(g);
        int cg = s.exact_chi_g(g);
        CHECK(cg >= chi);
        CHECK(cg <= g.max_degree() + 1);
        // scan definition: Alice wins at chi_g, loses (or chi_g == chi) below
        CHECK(s.solve_winner(g, cg) == Player::Alice);
        if (cg > chi) CHECK(s.solve_winner(g, cg - 1) == Player::Bob);
    }
}

TEST_CASE("canonical solver agrees with the assignment-level oracle") {
    ExactSolver s;
    PlainSolver plain;
    int checked = 0;
    for (int seed = 0; seed < 60; ++seed) {
        Rng rng({300, (std::uint64_t)seed});
        const int n = 4 + static_cast<int>(rng.below(5)); // 4..8
        Graph g = gen_gnp(n, 0.3 + 0.4 * rng.uniform(), {301, (std::uint64_t)seed});
        for (int k = 1; k <= g.max_degree() + 1; ++k) {
            for (Player first : {Player::Alice, Player::Bob}) {
                CHECK(s.solve_winner(g, k, first) == plain.winner(g, k, first));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("size cap is enforced") {
    ExactSolver small(6);
    Graph g = gen_gnp(8, 0.3, {400, 0});
    CHECK_THROWS_AS(small.solve_winner(g, 3), std::invalid_argument);
    CHECK_THROWS_AS(small.exact_chi_g(g), std::invalid_argument);
    CHECK_THROWS_AS(ExactSolver().solve_winner(g, 0), std::invalid_argument);
}
