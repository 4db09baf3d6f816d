// gcg: command-line front end for the graph coloring game toolkit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gcg/cubic.hpp"
#include "gcg/cubic_strategy.hpp"
#include "gcg/game.hpp"
#include "gcg/generators.hpp"
#include "gcg/harness.hpp"
#include "gcg/io.hpp"
#include "gcg/jsonio.hpp"
#include "gcg/params.hpp"
#include "gcg/solver.hpp"
#include "gcg/structure.hpp"
#include "gcg/two_phase.hpp"

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    int workers = 1;
    std::string format = "json"; // json | csv
    std::string out;             // empty or "-" means stdout
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

void emit_json(const GlobalOpts& g, const gcg::json& j) { emit(g.out, j.dump(2)); }

gcg::ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    return gcg::parse_config(f);
}

gcg::GeneratedGraph read_any_graph(const std::string& path, const std::string& model) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open graph file: " + path);
    if (model == "cubic") {
        auto cm = gcg::read_cubic(f);
        return {cm.graph, std::move(cm)};
    }
    return {gcg::read_graph(f), std::nullopt};
}

/// Reads "vertex color" pairs from stdin until a legal move arrives.
class HumanStrategy : public gcg::Strategy {
public:
    gcg::MoveChoice choose(const gcg::GameState& st) override {
        while (true) {
            std::cout << "your move (vertex color, k=" << st.k() << "): " << std::flush;
            int v = -1, c = -1;
            if (!(std::cin >> v >> c)) throw std::runtime_error("interactive input closed");
            gcg::MoveChoice m{v, c};
            if (st.is_legal(m)) return m;
            std::cout << "illegal move, try again\n";
        }
    }
    std::string name() const override { return "human"; }
};

} // namespace

int main(int argc, char** argv) {
    using namespace gcg;
    CLI::App app{"graph coloring game toolkit"};
    app.require_subcommand(1);

    GlobalOpts glob;
    app.add_option("--seed", glob.seed, "RNG seed");
    app.add_option("--workers", glob.workers, "worker thread count");
    app.add_option("--format", glob.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", glob.out, "output file ('-' for stdout)");

    ExperimentConfig cfg;
    std::string config_path, graph_path, u0_path, transcript_path, human_side = "alice";
    int k = 0, cap = 16, span_size = 0;
    bool interactive = false, want_winner = false;
    double eps = 0.1, mu = 3.0, d_opt = 0, alpha_opt = 0;

    auto add_model_opts = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "experiment config file");
        sub->add_option("--model", cfg.model, "gnp | regular | cubic");
        sub->add_option("-n,--n", cfg.n, "vertex count");
        sub->add_option("-d,--d", cfg.d, "average degree");
        sub->add_option("-p,--p", cfg.p, "edge probability (gnp)");
        sub->add_option("--alice", cfg.alice, "greedy | random | two-phase");
        sub->add_option("--bob", cfg.bob, "random | mirror | cubic");
        sub->add_option("--alpha", cfg.alpha, "two-phase alpha");
        sub->add_option("-c,--c", cfg.c, "segment constant for bob=cubic");
        sub->add_option("--k-min", cfg.k_min, "lowest color count");
        sub->add_option("--k-max", cfg.k_max, "highest color count");
        sub->add_option("--trials", cfg.trials, "trials per k");
        sub->add_option("--first", cfg.first, "who moves first: alice | bob");
    };

    auto* c_gen = app.add_subcommand("generate", "sample a graph and write it out");
    add_model_opts(c_gen);

    auto* c_play = app.add_subcommand("play", "play a single game");
    add_model_opts(c_play);
    c_play->add_option("--graph", graph_path, "play on this graph file instead of sampling");
    c_play->add_option("-k,--k", k, "color count (defaults to k-min)");
    c_play->add_flag("--interactive", interactive, "a human plays one side from stdin");
    c_play->add_option("--human", human_side, "interactive side: alice | bob");

    auto* c_replay = app.add_subcommand("replay", "validate a transcript against a graph");
    c_replay->add_option("--graph", graph_path, "graph file")->required();
    c_replay->add_option("-k,--k", k, "color count")->required();
    c_replay->add_option("--transcript", transcript_path, "transcript JSON file")->required();
    c_replay->add_option("--first", cfg.first, "who moved first");

    auto* c_est = app.add_subcommand("estimate", "estimate win rates over a k range");
    add_model_opts(c_est);

    auto* c_br = app.add_subcommand("bracket", "bracket the game chromatic number");
    add_model_opts(c_br);

    auto* c_exact = app.add_subcommand("exact", "exact solve a small graph");
    c_exact->add_option("--graph", graph_path, "graph file")->required();
    c_exact->add_option("-k,--k", k, "solve the winner for this k (omit for chi_g)");
    c_exact->add_flag("--winner", want_winner, "report the winner instead of chi_g");
    c_exact->add_option("--first", cfg.first, "who moves first");
    c_exact->add_option("--cap", cap, "vertex-count cap");

    auto* c_dec = app.add_subcommand("decompose", "build and verify the endgame decomposition");
    c_dec->add_option("--graph", graph_path, "graph file")->required();
    c_dec->add_option("-d,--d", d_opt, "average degree (default: 2m/n)");
    c_dec->add_option("--alpha", alpha_opt, "alpha parameter")->required();
    c_dec->add_option("--u0", u0_path, "file with the U0 vertex ids (default: all)");

    auto* c_h = app.add_subcommand("find-h", "search the cubic model for the theta subgraph");
    add_model_opts(c_h);
    c_h->add_option("--graph", graph_path, "cubic graph file instead of sampling");

    auto* c_audit = app.add_subcommand("audit", "structural property audit over samples");
    add_model_opts(c_audit);

    auto* c_ch = app.add_subcommand("chernoff", "binomial tail bounds");
    c_ch->add_option("-n,--n", cfg.n, "number of trials")->required();
    c_ch->add_option("-p,--p", cfg.p, "success probability")->required();
    c_ch->add_option("--eps", eps, "relative deviation in [0,1]");
    c_ch->add_option("--mu", mu, "heavy-tail factor (> e)");
    c_ch->add_option("-s,--s", span_size, "unused here; kept for symmetry")->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            cfg = load_config(config_path);
        }
        if (app.count("--seed")) cfg.seed = glob.seed;
        else glob.seed = cfg.seed;
        if (app.count("--workers")) cfg.workers = glob.workers;

        if (app.got_subcommand(c_gen)) {
            GeneratedGraph gg = make_graph(cfg, RngSeed{cfg.seed, 0});
            std::ostringstream os;
            if (gg.cm) write_cubic(os, *gg.cm);
            else write_graph(os, gg.g);
            emit(glob.out, os.str());
        } else if (app.got_subcommand(c_play)) {
            if (k > 0) { cfg.k_min = k; cfg.k_max = k; }
            GeneratedGraph gg = graph_path.empty()
                                    ? make_graph(cfg, RngSeed{cfg.seed, 0}.sub(0).sub(0).sub(0))
                                    : read_any_graph(graph_path, cfg.model);
            auto alice = make_alice(cfg);
            auto bob = make_bob(cfg, gg);
            HumanStrategy human;
            Strategy& sa = interactive && human_side == "alice" ? static_cast<Strategy&>(human)
                                                                : *alice;
            Strategy& sb = interactive && human_side == "bob" ? static_cast<Strategy&>(human)
                                                              : *bob;
            Outcome out = play_game(gg.g, cfg.k_min, sa, sb, parse_first(cfg.first),
                                    RngSeed{cfg.seed, 0}.sub(0).sub(0).sub(1));
            emit_json(glob, outcome_to_json(out));
        } else if (app.got_subcommand(c_replay)) {
            auto gg = read_any_graph(graph_path, "plain");
            std::ifstream tf(transcript_path);
            if (!tf) throw std::runtime_error("cannot open transcript file: " + transcript_path);
            json tj = json::parse(tf);
            if (tj.is_object() && tj.contains("transcript")) tj = tj["transcript"];
            auto moves = transcript_from_json(tj);
            GameState st = replay(gg.g, k, moves, parse_first(cfg.first));
            json j;
            j["valid"] = true;
            j["moves"] = static_cast<int>(moves.size());
            j["uncolored"] = st.uncolored_count();
            j["dead_vertex"] = st.detect_dead_vertex() ? json(*st.detect_dead_vertex())
                                                       : json(nullptr);
            emit_json(glob, j);
        } else if (app.got_subcommand(c_est)) {
            EstimateResult res = estimate_win_rate(cfg);
            if (glob.format == "csv") {
                std::ostringstream os;
                estimate_to_csv(os, res);
                emit(glob.out, os.str());
            } else {
                emit_json(glob, estimate_to_json(res));
            }
        } else if (app.got_subcommand(c_br)) {
            BracketResult br = bracket_chi_g(cfg);
            emit_json(glob, bracket_to_json(br));
        } else if (app.got_subcommand(c_exact)) {
            auto gg = read_any_graph(graph_path, "plain");
            ExactSolver solver(cap);
            json j;
            if (want_winner || k > 0) {
                Player winner = solver.solve_winner(gg.g, k, parse_first(cfg.first));
                j["k"] = k;
                j["winner"] = name(winner);
            } else {
                j["chi"] = solver.chromatic_number(gg.g);
                j["chi_g"] = solver.exact_chi_g(gg.g, parse_first(cfg.first));
            }
            emit_json(glob, j);
        } else if (app.got_subcommand(c_dec)) {
            auto gg = read_any_graph(graph_path, "plain");
            const double d = d_opt > 0
                                 ? d_opt
                                 : 2.0 * static_cast<double>(gg.g.edge_count()) / gg.g.n();
            ParameterSet ps = derive_parameters(gg.g.n(), d, alpha_opt);
            std::vector<int> u0;
            if (!u0_path.empty()) {
                std::ifstream uf(u0_path);
                if (!uf) throw std::runtime_error("cannot open u0 file: " + u0_path);
                for (int v; uf >> v;) u0.push_back(v);
            } else {
                for (int v = 0; v < gg.g.n(); ++v) u0.push_back(v);
            }
            Decomposition dec = build_and_verify(gg.g, u0, ps);
            emit_json(glob, decomposition_to_json(dec));
        } else if (app.got_subcommand(c_h)) {
            GeneratedGraph gg;
            if (!graph_path.empty()) {
                gg = read_any_graph(graph_path, "cubic");
            } else {
                cfg.model = "cubic";
                gg = make_graph(cfg, RngSeed{cfg.seed, 0});
            }
            auto h = find_h(*gg.cm, cfg.c);
            json j;
            j["found"] = h.has_value();
            if (h) j["h"] = h_to_json(*h);
            emit_json(glob, j);
        } else if (app.got_subcommand(c_audit)) {
            AuditResult ar = audit_structure(cfg);
            emit_json(glob, audit_to_json(ar));
        } else if (app.got_subcommand(c_ch)) {
            json j;
            j["n"] = cfg.n;
            j["p"] = cfg.p;
            j["eps"] = eps;
            j["mu"] = mu;
            j["lower_tail"] = chernoff_lower(cfg.n, cfg.p, eps);
            j["upper_tail"] = chernoff_upper(cfg.n, cfg.p, eps);
            j["heavy_tail"] = chernoff_heavy(cfg.n, cfg.p, mu);
            emit_json(glob, j);
        }
    } catch (const std::exception& e) {
        std::cerr << error_json(e.what()).dump() << '\n';
        return 1;
    }
    return 0;
}
