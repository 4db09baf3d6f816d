#ifndef GCG_TWO_PHASE_HPP
#define GCG_TWO_PHASE_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "gcg/game.hpp"
#include "gcg/params.hpp"
#include "gcg/strategies.hpp"
#include "gcg/structure.hpp"

namespace gcg {

/// Alice's two-phase strategy. Phase 1 is the greedy rule. Once few enough
/// vertices remain and all of them still have plenty of colors, the uncolored
/// set becomes U_0 of the endgame decomposition; if it verifies, phase 2
/// plays the forest F of light edges so that no vertex ever faces more than
/// three colored F-neighbors (four when U_l carries a cycle): Alice keeps
/// every component of uncolored F-vertices at no more than two colored
/// F-neighbors by coloring the median of the attachment points whenever Bob
/// pushes a component to three.
class AliceTwoPhaseStrategy : public Strategy {
public:
    /// Derives d from the graph at reset time.
    explicit AliceTwoPhaseStrategy(double alpha) : alpha_(alpha) {}
    /// Uses a fixed, caller-supplied parameter set.
    explicit AliceTwoPhaseStrategy(ParameterSet ps) : ps_(ps) {}

    struct Instrumentation {
        int phase2_moves = 0;
        int max_colored_f_neighbors = 0;
        int bound = 3; // 4 when U_l is unicyclic
        int bound_violations = 0;
        bool color_fallbacks = false; // a phase-2 pick had no available color
    };

    void reset(const Graph& g, int k, Player, RngSeed) override {
        g_ = &g;
        k_ = k;
        phase_ = 1;
        fallback_ = false;
        cycle_done_ = false;
        switch_move_ = -1;
        instr_ = Instrumentation{};
        dec_.reset();
        if (alpha_) {
            const double d = g.n() > 0 ? 2.0 * static_cast<double>(g.edge_count()) / g.n() : 0;
            if (d > std::exp(1.0))
                ps_ = derive_parameters(g.n(), d, *alpha_);
            else
                fallback_ = true; // too sparse for the parameter derivation
        }
    }

    MoveChoice choose(const GameState& st) override {
        if (fallback_) return AliceGreedyStrategy::greedy_move(st);
        if (phase_ == 1) {
            if (should_switch(st)) {
                start_phase2(st);
                if (fallback_) return AliceGreedyStrategy::greedy_move(st);
            } else {
                return AliceGreedyStrategy::greedy_move(st);
            }
        }
        return phase2_move(st);
    }

    std::string name() const override { return "alice-two-phase"; }

    int phase() const { return phase_; }
    bool fell_back() const { return fallback_; }
    int switch_move() const { return switch_move_; }
    const Instrumentation& instrumentation() const { return instr_; }
    const std::optional<Decomposition>& decomposition() const { return dec_; }

private:
    bool should_switch(const GameState& st) const {
        if (static_cast<double>(st.uncolored_count()) > 2.0 * ps_.gamma * ps_.n) return false;
        for (int v = 0; v < g_->n(); ++v)
            if (!st.is_colored(v) && st.available_count(v) < ps_.beta / 2.0) return false;
        return true;
    }

    void start_phase2(const GameState& st) {
        std::vector<int> u0;
        for (int v = 0; v < g_->n(); ++v)
            if (!st.is_colored(v)) u0.push_back(v);
        try {
            dec_ = build_and_verify(*g_, u0, ps_);
        } catch (const std::exception&) {
            fallback_ = true;
            return;
        }
        if (!dec_->report.ok()) {
            fallback_ = true;
            return;
        }
        phase_ = 2;
        switch_move_ = static_cast<int>(st.move_log().size());
        iso_cursor_ = 0;

        f_adj_.assign(g_->n(), {});
        for (auto [u, v] : dec_->forest_edges()) {
            f_adj_[u].push_back(v);
            f_adj_[v].push_back(u);
        }
        core_.clear();
        for (int v = 0; v < g_->n(); ++v)
            if (!f_adj_[v].empty()) core_.push_back(v);

        // the possible cycle of U_l: peel degree-<=1 vertices of the induced
        // tail; whatever survives is the cycle
        cycle_.clear();
        const auto& tail = dec_->levels.back();
        std::vector<char> alive(g_->n(), 0);
        std::vector<int> deg(g_->n(), 0);
        for (int v : tail) alive[v] = 1;
        for (int v : tail)
            for (int u : g_->neighbors(v)) deg[v] += alive[u];
        std::queue<int> q;
        for (int v : tail)
            if (deg[v] <= 1) q.push(v);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (!alive[v]) continue;
            alive[v] = 0;
            for (int u : g_->neighbors(v))
                if (alive[u] && --deg[u] == 1) q.push(u);
        }
        for (int v : tail)
            if (alive[v]) cycle_.push_back(v);
        instr_.bound = cycle_.empty() ? 3 : 4;
    }

    int colored_f_neighbors(const GameState& st, int v) const {
        int c = 0;
        for (int u : f_adj_[v]) c += st.is_colored(u);
        return c;
    }

    MoveChoice color_lowest(const GameState& st, int v) {
        ++instr_.phase2_moves;
        const int cf = colored_f_neighbors(st, v);
        instr_.max_colored_f_neighbors = std::max(instr_.max_colored_f_neighbors, cf);
        if (cf > instr_.bound) ++instr_.bound_violations;
        if (st.available_count(v) == 0) {
            instr_.color_fallbacks = true;
            return AliceGreedyStrategy::greedy_move(st);
        }
        for (int c = 1; c <= k_; ++c)
            if (st.is_available(v, c)) return {v, c};
        throw std::logic_error("two_phase: unreachable");
    }

    // component of uncolored F-vertices containing `start`, plus the
    // attachment vertex for each colored F-neighbor (unique per neighbor,
    // since F is a forest)
    struct Component {
        std::vector<int> members;             // BFS order
        std::vector<int> attachments;         // in-component endpoints
    };

    Component explore(const GameState& st, int start, std::vector<char>& visited) const {
        Component comp;
        std::map<int, int> att; // colored neighbor -> attachment vertex
        std::queue<int> q;
        q.push(start);
        visited[start] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.members.push_back(v);
            for (int u : f_adj_[v]) {
                if (st.is_colored(u)) {
                    att.emplace(u, v);
                } else if (!visited[u]) {
                    visited[u] = 1;
                    q.push(u);
                }
            }
        }
        for (auto& [u, x] : att) comp.attachments.push_back(x);
        return comp;
    }

    // tree path between a and b inside the uncolored component
    std::vector<int> tree_path(const GameState& st, int a, int b) const {
        std::map<int, int> parent;
        parent[a] = a;
        std::queue<int> q;
        q.push(a);
        while (!q.empty() && !parent.count(b)) {
            int v = q.front();
            q.pop();
            for (int u : f_adj_[v])
                if (!st.is_colored(u) && !parent.count(u)) {
                    parent[u] = v;
                    q.push(u);
                }
        }
        std::vector<int> path;
        for (int v = b;; v = parent.at(v)) {
            path.push_back(v);
            if (v == a) break;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    // the unique vertex lying on all three pairwise tree paths
    int median_of(const GameState& st, int a, int b, int c) const {
        auto path = tree_path(st, a, b);
        std::map<int, int> dist;
        std::queue<int> q;
        dist[c] = 0;
        q.push(c);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : f_adj_[v])
                if (!st.is_colored(u) && !dist.count(u)) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
        }
        int best = path.front(), best_d = dist.at(path.front());
        for (int v : path)
            if (dist.at(v) < best_d) {
                best = v;
                best_d = dist.at(v);
            }
        return best;
    }

    MoveChoice phase2_move(const GameState& st) {
        // unicyclic tail: spend the first endgame move on the cycle
        if (!cycle_done_) {
            cycle_done_ = true;
            for (int v : cycle_)
                if (!st.is_colored(v)) return color_lowest(st, v);
        }

        std::vector<char> visited(g_->n(), 0);
        std::optional<Component> lowest_comp;
        for (int v : core_) {
            if (st.is_colored(v) || visited[v]) continue;
            Component comp = explore(st, v, visited);
            if (comp.attachments.size() >= 3) {
                // urgent: restore the two-neighbor invariant at the median
                const auto& a = comp.attachments;
                int target = (a[0] == a[1] || a[0] == a[2]) ? a[0]
                             : (a[1] == a[2])               ? a[1]
                                                            : median_of(st, a[0], a[1], a[2]);
                return color_lowest(st, target);
            }
            if (!lowest_comp) lowest_comp = std::move(comp); // core_ is ascending
        }

        // calm turn: prefer the lowest F-isolated vertex. Colored-ness is
        // monotone, so a forward-only cursor suffices.
        while (iso_cursor_ < g_->n() &&
               (st.is_colored(iso_cursor_) || !f_adj_[iso_cursor_].empty()))
            ++iso_cursor_;
        if (iso_cursor_ < g_->n()) return color_lowest(st, iso_cursor_);

        if (!lowest_comp) // nothing uncolored should remain; defensive
            return AliceGreedyStrategy::greedy_move(st);
        const auto& comp = *lowest_comp;
        if (comp.attachments.empty()) return color_lowest(st, comp.members.front());
        if (comp.attachments.size() == 1) return color_lowest(st, comp.attachments[0]);
        auto path = tree_path(st, comp.attachments[0], comp.attachments[1]);
        return color_lowest(st, path[path.size() / 2]);
    }

    std::optional<double> alpha_;
    ParameterSet ps_;
    const Graph* g_ = nullptr;
    int k_ = 0;
    int phase_ = 1;
    bool fallback_ = false;
    bool cycle_done_ = false;
    int switch_move_ = -1;
    int iso_cursor_ = 0;
    Instrumentation instr_;
    std::optional<Decomposition> dec_;
    std::vector<std::vector<int>> f_adj_;
    std::vector<int> core_;
    std::vector<int> cycle_;
};

} // namespace gcg

#endif
