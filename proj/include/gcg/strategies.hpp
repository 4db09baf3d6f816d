#ifndef GCG_STRATEGIES_HPP
#define GCG_STRATEGIES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gcg/game.hpp"
#include "gcg/params.hpp"
#include "gcg/rng.hpp"

namespace gcg {

/// Uniform over all legal (vertex, color) pairs.
class RandomStrategy : public Strategy {
public:
    RandomStrategy() = default;

    void reset(const Graph&, int, Player, RngSeed seed) override { rng_.emplace(seed); }

    MoveChoice choose(const GameState& st) override {
        const int n = st.graph().n();
        std::uint64_t total = 0;
        for (int v = 0; v < n; ++v)
            if (!st.is_colored(v)) total += st.available_count(v);
        if (total == 0) throw std::runtime_error("random_choose: no legal move");
        std::uint64_t r = rng().below(total);
        for (int v = 0; v < n; ++v) {
            if (st.is_colored(v)) continue;
            const std::uint64_t a = st.available_count(v);
            if (r < a) {
                for (int c = 1; c <= st.k(); ++c) {
                    if (!st.is_available(v, c)) continue;
                    if (r == 0) return {v, c};
                    --r;
                }
            }
            r -= a;
        }
        throw std::logic_error("random_choose: unreachable");
    }

    std::string name() const override { return "random"; }

protected:
    Rng& rng() {
        if (!rng_) rng_.emplace(RngSeed{});
        return *rng_;
    }

private:
    std::optional<Rng> rng_;
};

/// Alice's greedy strategy: color the uncolored vertex with the fewest
/// available colors (ties: lowest id) with its lowest available color.
class AliceGreedyStrategy : public Strategy {
public:
    MoveChoice choose(const GameState& st) override { return greedy_move(st); }
    std::string name() const override { return "alice-greedy"; }

    static MoveChoice greedy_move(const GameState& st) {
        const int n = st.graph().n();
        int best = -1, best_a = st.k() + 1;
        for (int v = 0; v < n; ++v) {
            if (st.is_colored(v)) continue;
            const int a = st.available_count(v);
            if (a >= 1 && a < best_a) {
                best = v;
                best_a = a;
                if (a == 1) break;
            }
        }
        if (best < 0) throw std::runtime_error("alice_greedy: no colorable vertex");
        for (int c = 1; c <= st.k(); ++c)
            if (st.is_available(best, c)) return {best, c};
        throw std::logic_error("alice_greedy: unreachable");
    }
};

/// Bob's mirroring strategy: repeat the color i Alice just used on a
/// uniformly random vertex of U_i (uncolored, no neighbor colored i).
/// If U_i is empty, fall back to the color whose U_j is largest; if every
/// U_j is empty, play a uniform random legal move.
class BobMirrorStrategy : public Strategy {
public:
    void reset(const Graph& g, int k, Player side, RngSeed seed) override {
        rng_.emplace(seed);
        fallback_.reset(g, k, side, seed.sub(7));
    }

    MoveChoice choose(const GameState& st) override {
        const auto& log = st.move_log();
        if (log.empty()) return fallback_.choose(st); // nothing to mirror yet
        const int mirror = log.back().color;
        if (auto m = pick_uniform(st, mirror)) return *m;
        // fallback: the color with the most still-colorable vertices
        int best_c = 0;
        std::uint64_t best_sz = 0;
        const int n = st.graph().n();
        for (int c = 1; c <= st.k(); ++c) {
            std::uint64_t sz = 0;
            for (int v = 0; v < n; ++v)
                if (!st.is_colored(v) && st.is_available(v, c)) ++sz;
            if (sz > best_sz) {
                best_sz = sz;
                best_c = c;
            }
        }
        if (best_c != 0) {
            if (auto m = pick_uniform(st, best_c)) return *m;
        }
        return fallback_.choose(st);
    }

    std::string name() const override { return "bob-mirror"; }

private:
    std::optional<MoveChoice> pick_uniform(const GameState& st, int c) {
        const int n = st.graph().n();
        std::uint64_t count = 0;
        for (int v = 0; v < n; ++v)
            if (!st.is_colored(v) && st.is_available(v, c)) ++count;
        if (count == 0) return std::nullopt;
        std::uint64_t r = rng_->below(count);
        for (int v = 0; v < n; ++v) {
            if (st.is_colored(v) || !st.is_available(v, c)) continue;
            if (r == 0) return MoveChoice{v, c};
            --r;
        }
        return std::nullopt;
    }

    std::optional<Rng> rng_;
    RandomStrategy fallback_;
};

} // namespace gcg

#endif
