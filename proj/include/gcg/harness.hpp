#ifndef GCG_HARNESS_HPP
#define GCG_HARNESS_HPP

#include <atomic>
#include <cmath>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gcg/cubic.hpp"
#include "gcg/cubic_strategy.hpp"
#include "gcg/game.hpp"
#include "gcg/generators.hpp"
#include "gcg/io.hpp"
#include "gcg/params.hpp"
#include "gcg/strategies.hpp"
#include "gcg/structure.hpp"
#include "gcg/two_phase.hpp"

namespace gcg {

// ---------------------------------------------------------------------------
// Experiment configuration: "key value" lines, '#' comments.
// ---------------------------------------------------------------------------

struct ExperimentConfig {
    std::string model = "gnp"; // gnp | regular | cubic
    int n = 100;
    double d = 10;     // average degree; gnp uses p = d/n unless p is set
    double p = -1;     // explicit edge probability for gnp (overrides d)
    std::string alice = "greedy";   // greedy | random | two-phase
    std::string bob = "random";     // random | mirror | cubic
    double alpha = 1.0;             // two-phase parameter
    double c = 0.5;                 // segment-length constant for bob=cubic
    int k_min = 3, k_max = 3;
    int trials = 100;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string first = "alice"; // alice | bob
};

inline ExperimentConfig parse_config(std::istream& is) {
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        auto want = [&](auto& slot) {
            if (!(ls >> slot)) throw ParseError("config: missing value for '" + key + "'", lineno);
        };
        if (key == "model") want(cfg.model);
        else if (key == "n") want(cfg.n);
        else if (key == "d") want(cfg.d);
        else if (key == "p") want(cfg.p);
        else if (key == "alice") want(cfg.alice);
        else if (key == "bob") want(cfg.bob);
        else if (key == "alpha") want(cfg.alpha);
        else if (key == "c") want(cfg.c);
        else if (key == "k_min") want(cfg.k_min);
        else if (key == "k_max") want(cfg.k_max);
        else if (key == "k") { want(cfg.k_min); cfg.k_max = cfg.k_min; }
        else if (key == "trials") want(cfg.trials);
        else if (key == "seed") want(cfg.seed);
        else if (key == "workers") want(cfg.workers);
        else if (key == "first") want(cfg.first);
        else throw ParseError("config: unknown key '" + key + "'", lineno);
    }
    return cfg;
}

inline void serialize_config(std::ostream& os, const ExperimentConfig& cfg) {
    os << "model " << cfg.model << '\n'
       << "n " << cfg.n << '\n'
       << "d " << cfg.d << '\n'
       << "p " << cfg.p << '\n'
       << "alice " << cfg.alice << '\n'
       << "bob " << cfg.bob << '\n'
       << "alpha " << cfg.alpha << '\n'
       << "c " << cfg.c << '\n'
       << "k_min " << cfg.k_min << '\n'
       << "k_max " << cfg.k_max << '\n'
       << "trials " << cfg.trials << '\n'
       << "seed " << cfg.seed << '\n'
       << "workers " << cfg.workers << '\n'
       << "first " << cfg.first << '\n';
}

// ---------------------------------------------------------------------------
// Graph and strategy factories.
// ---------------------------------------------------------------------------

struct GeneratedGraph {
    Graph g;
    std::optional<CubicModelGraph> cm;
};

inline GeneratedGraph make_graph(const ExperimentConfig& cfg, RngSeed seed) {
    if (cfg.model == "gnp") {
        const double p = cfg.p >= 0 ? cfg.p : cfg.d / cfg.n;
        return {gen_gnp(cfg.n, p, seed), std::nullopt};
    }
    if (cfg.model == "regular") {
        const int d = static_cast<int>(std::lround(cfg.d));
        return {gen_regular_config(cfg.n, d, seed), std::nullopt};
    }
    if (cfg.model == "cubic") {
        auto cm = gen_cubic_cycle_matching(cfg.n, seed);
        return {cm.graph, std::move(cm)};
    }
    throw std::invalid_argument("unknown model '" + cfg.model + "'");
}

inline std::unique_ptr<Strategy> make_alice(const ExperimentConfig& cfg) {
    if (cfg.alice == "greedy") return std::make_unique<AliceGreedyStrategy>();
    if (cfg.alice == "random") return std::make_unique<RandomStrategy>();
    if (cfg.alice == "two-phase") return std::make_unique<AliceTwoPhaseStrategy>(cfg.alpha);
    throw std::invalid_argument("unknown alice strategy '" + cfg.alice + "'");
}

inline std::unique_ptr<Strategy> make_bob(const ExperimentConfig& cfg, const GeneratedGraph& gg) {
    if (cfg.bob == "random") return std::make_unique<RandomStrategy>();
    if (cfg.bob == "mirror") return std::make_unique<BobMirrorStrategy>();
    if (cfg.bob == "cubic") {
        if (!gg.cm)
            throw std::invalid_argument("bob=cubic requires model=cubic");
        return std::make_unique<BobCubicStrategy>(*gg.cm, cfg.c);
    }
    throw std::invalid_argument("unknown bob strategy '" + cfg.bob + "'");
}

inline Player parse_first(const std::string& s) {
    if (s == "alice") return Player::Alice;
    if (s == "bob") return Player::Bob;
    throw std::invalid_argument("first must be 'alice' or 'bob'");
}

// ---------------------------------------------------------------------------
// Trial records and estimation.
// ---------------------------------------------------------------------------

struct TrialRecord {
    int trial = 0;
    int k = 0;
    std::uint64_t stream = 0;
    Player winner = Player::Alice;
    OutcomeReason reason = OutcomeReason::AllColored;
    int moves = 0;
    int switch_move = -1;      // two-phase: move index of the phase switch
    bool strategy_fallback = false;
    bool h_found = false;      // bob-cubic
    int bound_violations = 0;  // two-phase instrumentation
};

/// Wilson score interval for a binomial proportion.
inline std::pair<double, double> wilson_interval(long long wins, long long n,
                                                 double z = 1.959964) {
    if (n <= 0) return {0.0, 1.0};
    const double phat = static_cast<double>(wins) / static_cast<double>(n);
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = phat + z2 / (2.0 * n);
    const double rad = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    return {std::max(0.0, (centre - rad) / denom), std::min(1.0, (centre + rad) / denom)};
}

namespace detail {

template <class F>
void parallel_for(int total, int workers, F&& f) {
    workers = std::max(1, workers);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i; (i = next.fetch_add(1)) < total;) f(i);
    };
    if (workers == 1 || total <= 1) {
        work();
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int i = 0; i < workers; ++i) threads.emplace_back(work);
    for (auto& t : threads) t.join();
}

} // namespace detail

struct KRow {
    int k = 0;
    long long trials = 0;
    long long alice_wins = 0;
    double rate = 0, lo = 0, hi = 0;
};

struct EstimateResult {
    ExperimentConfig config;
    std::vector<KRow> table;
    std::vector<TrialRecord> records;
    bool monotone = true; // Alice's rate nondecreasing in k
};

/// Runs one trial: fresh graph, fresh strategies, one game. The substream is
/// a pure function of (seed, k index, trial index), so results are identical
/// for any worker count.
inline TrialRecord run_trial(const ExperimentConfig& cfg, int k_index, int trial) {
    const RngSeed ts = RngSeed{cfg.seed, 0}
                           .sub(static_cast<std::uint64_t>(k_index))
                           .sub(static_cast<std::uint64_t>(trial));
    const int k = cfg.k_min + k_index;
    GeneratedGraph gg = make_graph(cfg, ts.sub(0));
    auto alice = make_alice(cfg);
    auto bob = make_bob(cfg, gg);
    Outcome out = play_game(gg.g, k, *alice, *bob, parse_first(cfg.first), ts.sub(1));
    TrialRecord rec;
    rec.trial = trial;
    rec.k = k;
    rec.stream = ts.stream;
    rec.winner = out.winner;
    rec.reason = out.reason;
    rec.moves = static_cast<int>(out.transcript.size());
    if (auto* tp = dynamic_cast<AliceTwoPhaseStrategy*>(alice.get())) {
        rec.switch_move = tp->switch_move();
        rec.strategy_fallback = tp->fell_back();
        rec.bound_violations = tp->instrumentation().bound_violations;
    }
    if (auto* bc = dynamic_cast<BobCubicStrategy*>(bob.get())) {
        rec.h_found = bc->h_found();
        rec.strategy_fallback = rec.strategy_fallback || bc->fell_back();
    }
    return rec;
}

inline EstimateResult estimate_win_rate(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("estimate: trials must be >= 1");
    if (cfg.k_max < cfg.k_min) throw std::invalid_argument("estimate: k_max < k_min");
    const int kcount = cfg.k_max - cfg.k_min + 1;
    const int total = kcount * cfg.trials;
    EstimateResult res;
    res.config = cfg;
    res.records.resize(total);
    detail::parallel_for(total, cfg.workers, [&](int idx) {
        const int j = idx / cfg.trials, t = idx % cfg.trials;
        res.records[idx] = run_trial(cfg, j, t);
    });
    res.table.resize(kcount);
    for (int j = 0; j < kcount; ++j) {
        KRow& row = res.table[j];
        row.k = cfg.k_min + j;
        row.trials = cfg.trials;
        for (int t = 0; t < cfg.trials; ++t)
            row.alice_wins += res.records[j * cfg.trials + t].winner == Player::Alice;
        row.rate = static_cast<double>(row.alice_wins) / cfg.trials;
        std::tie(row.lo, row.hi) = wilson_interval(row.alice_wins, cfg.trials);
    }
    for (int j = 1; j < kcount; ++j)
        if (res.table[j].rate < res.table[j - 1].rate) res.monotone = false;
    return res;
}

// ---------------------------------------------------------------------------
// Bracketing the game chromatic number.
// ---------------------------------------------------------------------------

struct BracketResult {
    EstimateResult est;
    std::optional<int> k_lo;  // largest k where Bob wins at least 95%
    std::optional<int> k_hi;  // smallest k where Alice wins at least 95%
    double degree_ratio = 0;  // D = d / ln d
    std::optional<double> ratio_lo, ratio_hi; // k / D
    std::string note;
};

inline BracketResult bracket_chi_g(const ExperimentConfig& cfg, double threshold = 0.95) {
    BracketResult br;
    br.est = estimate_win_rate(cfg);
    for (const auto& row : br.est.table) {
        if (1.0 - row.rate >= threshold) br.k_lo = row.k;
        if (row.rate >= threshold && !br.k_hi) br.k_hi = row.k;
    }
    const double d = cfg.p >= 0 && cfg.model == "gnp" ? cfg.p * cfg.n : cfg.d;
    if (d > 1) {
        br.degree_ratio = d / std::log(d);
        if (br.k_lo) br.ratio_lo = *br.k_lo / br.degree_ratio;
        if (br.k_hi) br.ratio_hi = *br.k_hi / br.degree_ratio;
    }
    if (!br.k_lo || !br.k_hi) br.note = "no bracket in the scanned k range";
    else if (!br.est.monotone) br.note = "win rate is not monotone in k; widen trials";
    return br;
}

// ---------------------------------------------------------------------------
// Structural audit over freshly sampled graphs.
// ---------------------------------------------------------------------------

struct AuditResult {
    int trials = 0;
    // gnp / regular
    int density_witnesses = 0;
    int density_inexact = 0;
    int edge_span_violations = 0;
    int degree_violations = 0; // some vertex above 2d
    // cubic
    bool cubic = false;
    double mean_x = 0, expected_x = 0;
    int good_shortfall = 0; // catalogs with under 95% of (1-c^2) n good starts
};

inline AuditResult audit_structure(const ExperimentConfig& cfg) {
    AuditResult ar;
    ar.trials = cfg.trials;
    ar.cubic = cfg.model == "cubic";
    for (int t = 0; t < cfg.trials; ++t) {
        const RngSeed ts = RngSeed{cfg.seed, 0}.sub(static_cast<std::uint64_t>(t));
        GeneratedGraph gg = make_graph(cfg, ts.sub(0));
        if (ar.cubic) {
            auto cat = find_good_segments(*gg.cm, cfg.c);
            ar.mean_x += cat.x_statistic / cfg.trials;
            ar.expected_x = expected_short_chords(cfg.n, cat.m);
            const double target = 0.95 * (1.0 - cfg.c * cfg.c) * cfg.n;
            if (static_cast<double>(cat.good_starts.size()) < target) ++ar.good_shortfall;
            continue;
        }
        const double d = cfg.p >= 0 && cfg.model == "gnp" ? cfg.p * cfg.n : cfg.d;
        auto ds = density_scan(gg.g, 0.5, 2.0);
        ar.density_witnesses += ds.witness.has_value();
        ar.density_inexact += !ds.exact;
        const int s = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(cfg.n))));
        auto es = edge_span_check(gg.g, s, 20, d / cfg.n, ts.sub(1));
        ar.edge_span_violations += es.violation;
        if (gg.g.max_degree() > 2 * d) ++ar.degree_violations;
    }
    return ar;
}

/// One game, transcript retained.
struct PlayResult {
    GeneratedGraph gg;
    int k = 0;
    Outcome outcome;
    TrialRecord record;
};

inline PlayResult play_once(const ExperimentConfig& cfg) {
    PlayResult pr;
    const RngSeed ts = RngSeed{cfg.seed, 0}.sub(0).sub(0);
    pr.k = cfg.k_min;
    pr.gg = make_graph(cfg, ts.sub(0));
    auto alice = make_alice(cfg);
    auto bob = make_bob(cfg, pr.gg);
    pr.outcome = play_game(pr.gg.g, pr.k, *alice, *bob, parse_first(cfg.first), ts.sub(1));
    pr.record.k = pr.k;
    pr.record.stream = ts.stream;
    pr.record.winner = pr.outcome.winner;
    pr.record.reason = pr.outcome.reason;
    pr.record.moves = static_cast<int>(pr.outcome.transcript.size());
    if (auto* tp = dynamic_cast<AliceTwoPhaseStrategy*>(alice.get())) {
        pr.record.switch_move = tp->switch_move();
        pr.record.strategy_fallback = tp->fell_back();
        pr.record.bound_violations = tp->instrumentation().bound_violations;
    }
    if (auto* bc = dynamic_cast<BobCubicStrategy*>(bob.get())) {
        pr.record.h_found = bc->h_found();
        pr.record.strategy_fallback = pr.record.strategy_fallback || bc->fell_back();
    }
    return pr;
}

} // namespace gcg

#endif
