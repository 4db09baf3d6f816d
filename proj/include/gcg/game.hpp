#ifndef GCG_GAME_HPP
#define GCG_GAME_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcg/graph.hpp"
#include "gcg/rng.hpp"

namespace gcg {

enum class Player { Alice, Bob };

inline Player other(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }
inline const char* name(Player p) { return p == Player::Alice ? "Alice" : "Bob"; }

/// A move: color an uncolored vertex with a color in 1..k.
struct MoveChoice {
    int vertex;
    int color;
};

struct Move {
    Player player;
    int vertex;
    int color;
};

enum class OutcomeReason { AllColored, DeadVertex, IllegalMove };

struct Outcome {
    Player winner;
    OutcomeReason reason;
    int dead_vertex = -1;          // set for DeadVertex
    Player offender = Player::Alice; // set for IllegalMove
    std::vector<Move> transcript;
};

/// Partial proper coloring of a graph with k colors plus turn state.
/// Maintains, per vertex, the set of colors blocked by colored neighbors,
/// so availability queries and dead-vertex detection are incremental.
class GameState {
public:
    GameState(const Graph& g, int k, Player first = Player::Alice)
        : g_(&g), k_(k), words_((k + 63) / 64), to_move_(first) {
        if (k < 1) throw std::invalid_argument("GameState: k must be >= 1");
        color_.assign(g.n(), 0);
        blocked_.assign(static_cast<std::size_t>(g.n()) * words_, 0);
        avail_.assign(g.n(), k);
        classes_.assign(k, {});
        uncolored_ = g.n();
    }

    const Graph& graph() const { return *g_; }
    int k() const { return k_; }
    Player to_move() const { return to_move_; }
    int uncolored_count() const { return uncolored_; }
    const std::vector<Move>& move_log() const { return log_; }
    const std::vector<int>& class_vertices(int c) const { return classes_.at(c - 1); }

    int color_of(int v) const { return color_[v]; }
    bool is_colored(int v) const { return color_[v] != 0; }

    /// a(v, C): number of colors available at uncolored v.
    int available_count(int v) const { return avail_[v]; }

    bool is_available(int v, int c) const {
        return !(blocked_[static_cast<std::size_t>(v) * words_ + (c - 1) / 64] >>
                     ((c - 1) % 64) &
                 1ULL);
    }

    /// A(v, C): the colors no neighbor of v carries. Throws if v is colored.
    std::vector<int> available_colors(int v) const {
        if (is_colored(v)) throw std::invalid_argument("available_colors: vertex already colored");
        std::vector<int> out;
        out.reserve(avail_[v]);
        for (int c = 1; c <= k_; ++c)
            if (is_available(v, c)) out.push_back(c);
        return out;
    }

    bool is_legal(const MoveChoice& m) const {
        return m.vertex >= 0 && m.vertex < g_->n() && m.color >= 1 && m.color <= k_ &&
               !is_colored(m.vertex) && is_available(m.vertex, m.color);
    }

    /// Applies a legal move: colors the vertex, flips the turn, updates
    /// neighbor availability and the dead set. Throws on illegal moves;
    /// the referee checks legality first and never triggers this.
    void apply(const MoveChoice& m) {
        if (!is_legal(m)) throw std::invalid_argument("apply: illegal move");
        color_[m.vertex] = m.color;
        classes_[m.color - 1].push_back(m.vertex);
        --uncolored_;
        dead_.erase(m.vertex);
        for (int u : g_->neighbors(m.vertex)) {
            if (is_colored(u)) continue;
            auto& w = blocked_[static_cast<std::size_t>(u) * words_ + (m.color - 1) / 64];
            const std::uint64_t bit = 1ULL << ((m.color - 1) % 64);
            if (!(w & bit)) {
                w |= bit;
                if (--avail_[u] == 0) dead_.insert(u);
            }
        }
        log_.push_back({to_move_, m.vertex, m.color});
        to_move_ = other(to_move_);
    }

    /// Lowest-id uncolored vertex with zero available colors, if any.
    std::optional<int> detect_dead_vertex() const {
        if (dead_.empty()) return std::nullopt;
        return *dead_.begin();
    }

private:
    const Graph* g_;
    int k_;
    int words_;
    Player to_move_;
    std::vector<int> color_;
    std::vector<std::uint64_t> blocked_;
    std::vector<int> avail_;
    std::vector<std::vector<int>> classes_;
    std::set<int> dead_;
    std::vector<Move> log_;
    int uncolored_ = 0;
};

/// Move-selection contract. One instance referees one game at a time:
/// reset() is called with the game's graph, color count, side, and RNG
/// substream before the first choose().
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual void reset(const Graph& g, int k, Player side, RngSeed seed) {
        (void)g; (void)k; (void)side; (void)seed;
    }
    /// Must return a legal move whenever one exists.
    virtual MoveChoice choose(const GameState& state) = 0;
    virtual std::string name() const = 0;
};

/// Referees one game from the empty coloring. Alice wins when everything is
/// colored; Bob wins the instant any vertex goes dead, no matter whose move
/// created it. A strategy returning an illegal move (or throwing) loses.
inline Outcome play_game(const Graph& g, int k, Strategy& alice, Strategy& bob,
                         Player first = Player::Alice, RngSeed seed = {}) {
    alice.reset(g, k, Player::Alice, seed.sub(0));
    bob.reset(g, k, Player::Bob, seed.sub(1));
    GameState state(g, k, first);
    while (true) {
        if (auto dead = state.detect_dead_vertex()) {
            return {Player::Bob, OutcomeReason::DeadVertex, *dead, Player::Alice,
                    state.move_log()};
        }
        if (state.uncolored_count() == 0)
            return {Player::Alice, OutcomeReason::AllColored, -1, Player::Alice,
                    state.move_log()};
        Player mover = state.to_move();
        Strategy& s = (mover == Player::Alice) ? alice : bob;
        MoveChoice m{-1, -1};
        bool ok = true;
        try {
            m = s.choose(state);
        } catch (...) {
            ok = false;
        }
        if (!ok || !state.is_legal(m))
            return {other(mover), OutcomeReason::IllegalMove, -1, mover, state.move_log()};
        state.apply(m);
    }
}

/// Re-applies a transcript from the empty coloring; throws if any recorded
/// move is illegal or the alternation is off.
inline GameState replay(const Graph& g, int k, const std::vector<Move>& transcript,
                        Player first = Player::Alice) {
    GameState state(g, k, first);
    for (const auto& mv : transcript) {
        if (mv.player != state.to_move())
            throw std::invalid_argument("replay: transcript breaks alternation");
        state.apply({mv.vertex, mv.color});
    }
    return state;
}

} // namespace gcg

#endif
