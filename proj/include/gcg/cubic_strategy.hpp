#ifndef GCG_CUBIC_STRATEGY_HPP
#define GCG_CUBIC_STRATEGY_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "gcg/cubic.hpp"
#include "gcg/game.hpp"
#include "gcg/strategies.hpp"

namespace gcg {

/// Bob's strategy on the cycle-plus-matching cubic model with three colors.
/// On his first move Bob locates an induced theta subgraph H avoiding the
/// close-set of Alice's opening vertex, colors its branch vertex v, then
/// forces along an even cycle (or a single v-w path when Alice grabbed w),
/// coloring every second vertex so each skipped vertex keeps one available
/// color. The final forcing move leaves a double threat; the kill-scan that
/// opens every turn converts a threat into a dead vertex. Anything off
/// script drops to uniform random play and raises a flag.
class BobCubicStrategy : public Strategy {
public:
    explicit BobCubicStrategy(CubicModelGraph cm, double c = 0.5)
        : cm_(std::move(cm)), c_(c) {}

    void reset(const Graph& g, int k, Player side, RngSeed seed) override {
        fallback_.reset(g, k, side, seed.sub(3));
        mode_ = Mode::Start;
        h_found_ = false;
        fell_back_ = false;
        h_.reset();
        steps_.clear();
        next_step_ = 0;
        if (g.n() != cm_.graph.n() || g.edge_count() != cm_.graph.edge_count()) go_random();
    }

    MoveChoice choose(const GameState& st) override {
        if (mode_ == Mode::Fallback) return fallback_.choose(st);
        if (auto kill = find_kill(st)) return *kill;
        switch (mode_) {
        case Mode::Start:
            return opening(st);
        case Mode::AwaitReply:
            make_plan(st);
            if (mode_ == Mode::Fallback) return fallback_.choose(st);
            [[fallthrough]];
        case Mode::Forcing:
            return forcing_move(st);
        default:
            return fallback_.choose(st);
        }
    }

    std::string name() const override { return "bob-cubic"; }

    bool h_found() const { return h_found_; }
    bool fell_back() const { return fell_back_; }
    const std::optional<HSubgraph>& h() const { return h_; }

private:
    enum class Mode { Start, AwaitReply, Forcing, Fallback };

    struct Step {
        int vertex;
        std::vector<int> diff_from; // avoid the current colors of these
    };

    void go_random() {
        mode_ = Mode::Fallback;
        fell_back_ = true;
    }

    // color z to strangle a vertex down to zero available colors
    std::optional<MoveChoice> find_kill(const GameState& st) const {
        const Graph& g = st.graph();
        for (int u = 0; u < g.n(); ++u) {
            if (st.is_colored(u) || st.available_count(u) != 1) continue;
            int c = 0;
            for (int cc = 1; cc <= st.k(); ++cc)
                if (st.is_available(u, cc)) { c = cc; break; }
            for (int z : g.neighbors(u))
                if (!st.is_colored(z) && st.is_available(z, c)) return MoveChoice{z, c};
        }
        return std::nullopt;
    }

    MoveChoice opening(const GameState& st) {
        std::vector<int> forbidden;
        if (!st.move_log().empty()) {
            const int a0 = st.move_log().front().vertex;
            for (int x = 0; x < cm_.n(); ++x)
                if (close(cm_.graph, x, a0)) forbidden.push_back(x);
        }
        h_ = find_h(cm_, c_, forbidden);
        if (!h_ || st.is_colored(h_->v)) {
            go_random();
            return fallback_.choose(st);
        }
        h_found_ = true;
        mode_ = Mode::AwaitReply;
        for (int c = 1; c <= st.k(); ++c)
            if (st.is_available(h_->v, c)) return {h_->v, c};
        go_random();
        return fallback_.choose(st);
    }

    // turn one or two of H's paths into a forcing sequence after Alice's reply
    void make_plan(const GameState& st) {
        const int reply = st.move_log().back().vertex;
        std::vector<int> seq;
        bool is_cycle;
        if (reply == h_->w) {
            // w is colored: force along a single path
            seq = h_->paths[0];
            is_cycle = false;
        } else {
            // even cycle from the two paths least entangled with the reply
            std::array<int, 3> score{};
            for (int i = 0; i < 3; ++i)
                for (int x : h_->paths[i])
                    if (x != h_->v && x != h_->w && (x == reply || close(cm_.graph, x, reply)))
                        ++score[i];
            std::array<int, 3> order{0, 1, 2};
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return score[a] < score[b]; });
            const auto& pa = h_->paths[order[0]];
            const auto& pb = h_->paths[order[1]];
            seq = pa;
            for (auto it = pb.rbegin() + 1; it + 1 != pb.rend(); ++it) seq.push_back(*it);
            is_cycle = true;
        }
        // color seq[2], seq[4], ...; each differs from two back, the last one
        // also from the far anchor (v on the cycle, w on the path)
        const int L = is_cycle ? static_cast<int>(seq.size()) : static_cast<int>(seq.size()) - 1;
        steps_.clear();
        for (int i = 2; i <= L - 2; i += 2) {
            Step s{seq[i], {seq[i - 2]}};
            if (i == L - 2) s.diff_from.push_back(is_cycle ? seq[0] : seq.back());
            steps_.push_back(std::move(s));
        }
        next_step_ = 0;
        mode_ = steps_.empty() ? Mode::Fallback : Mode::Forcing;
        if (steps_.empty()) fell_back_ = true;
    }

    MoveChoice forcing_move(const GameState& st) {
        if (next_step_ >= steps_.size()) {
            // plan exhausted and no kill available: the threats failed
            go_random();
            return fallback_.choose(st);
        }
        const Step& s = steps_[next_step_];
        if (st.is_colored(s.vertex)) {
            go_random();
            return fallback_.choose(st);
        }
        for (int c = 1; c <= st.k(); ++c) {
            if (!st.is_available(s.vertex, c)) continue;
            bool clash = false;
            for (int x : s.diff_from) clash |= st.color_of(x) == c;
            if (clash) continue;
            ++next_step_;
            return {s.vertex, c};
        }
        go_random();
        return fallback_.choose(st);
    }

    CubicModelGraph cm_;
    double c_;
    RandomStrategy fallback_;
    Mode mode_ = Mode::Start;
    bool h_found_ = false;
    bool fell_back_ = false;
    std::optional<HSubgraph> h_;
    std::vector<Step> steps_;
    std::size_t next_step_ = 0;
};

} // namespace gcg

#endif
