#ifndef GCG_JSONIO_HPP
#define GCG_JSONIO_HPP

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gcg/cubic.hpp"
#include "gcg/game.hpp"
#include "gcg/harness.hpp"
#include "gcg/structure.hpp"

namespace gcg {

using json = nlohmann::ordered_json;

inline const char* reason_name(OutcomeReason r) {
    switch (r) {
    case OutcomeReason::AllColored: return "all-colored";
    case OutcomeReason::DeadVertex: return "dead-vertex";
    default: return "illegal-move";
    }
}

inline json transcript_to_json(const std::vector<Move>& moves) {
    json arr = json::array();
    for (const auto& m : moves)
        arr.push_back({{"player", name(m.player)}, {"vertex", m.vertex}, {"color", m.color}});
    return arr;
}

inline std::vector<Move> transcript_from_json(const json& arr) {
    std::vector<Move> out;
    for (const auto& j : arr) {
        Move m;
        const std::string p = j.at("player");
        if (p != "Alice" && p != "Bob") throw std::runtime_error("transcript: bad player");
        m.player = p == "Alice" ? Player::Alice : Player::Bob;
        m.vertex = j.at("vertex");
        m.color = j.at("color");
        out.push_back(m);
    }
    return out;
}

inline json outcome_to_json(const Outcome& o) {
    json j;
    j["winner"] = name(o.winner);
    j["reason"] = reason_name(o.reason);
    if (o.reason == OutcomeReason::DeadVertex) j["dead_vertex"] = o.dead_vertex;
    if (o.reason == OutcomeReason::IllegalMove) j["offender"] = name(o.offender);
    j["moves"] = static_cast<int>(o.transcript.size());
    j["transcript"] = transcript_to_json(o.transcript);
    return j;
}

inline json record_to_json(const TrialRecord& r) {
    json j;
    j["trial"] = r.trial;
    j["k"] = r.k;
    j["stream"] = r.stream;
    j["winner"] = name(r.winner);
    j["reason"] = reason_name(r.reason);
    j["moves"] = r.moves;
    j["switch_move"] = r.switch_move;
    j["strategy_fallback"] = r.strategy_fallback;
    j["h_found"] = r.h_found;
    j["bound_violations"] = r.bound_violations;
    return j;
}

inline json estimate_to_json(const EstimateResult& res, bool with_records = true) {
    json j;
    j["model"] = res.config.model;
    j["n"] = res.config.n;
    j["alice"] = res.config.alice;
    j["bob"] = res.config.bob;
    j["trials"] = res.config.trials;
    j["seed"] = res.config.seed;
    j["first"] = res.config.first;
    j["monotone"] = res.monotone;
    json table = json::array();
    for (const auto& row : res.table)
        table.push_back({{"k", row.k},
                         {"trials", row.trials},
                         {"alice_wins", row.alice_wins},
                         {"rate", row.rate},
                         {"wilson_lo", row.lo},
                         {"wilson_hi", row.hi}});
    j["table"] = table;
    if (with_records) {
        json recs = json::array();
        for (const auto& r : res.records) recs.push_back(record_to_json(r));
        j["records"] = recs;
    }
    return j;
}

/// Fixed-layout CSV: header plus one row per k, six decimal places.
inline void estimate_to_csv(std::ostream& os, const EstimateResult& res) {
    os << "k,trials,alice_wins,rate,wilson_lo,wilson_hi\n" << std::fixed << std::setprecision(6);
    for (const auto& row : res.table)
        os << row.k << ',' << row.trials << ',' << row.alice_wins << ',' << row.rate << ','
           << row.lo << ',' << row.hi << '\n';
}

inline json bracket_to_json(const BracketResult& br) {
    json j = estimate_to_json(br.est, false);
    j["k_lo"] = br.k_lo ? json(*br.k_lo) : json(nullptr);
    j["k_hi"] = br.k_hi ? json(*br.k_hi) : json(nullptr);
    j["degree_ratio"] = br.degree_ratio;
    j["ratio_lo"] = br.ratio_lo ? json(*br.ratio_lo) : json(nullptr);
    j["ratio_hi"] = br.ratio_hi ? json(*br.ratio_hi) : json(nullptr);
    if (!br.note.empty()) j["note"] = br.note;
    return j;
}

inline json audit_to_json(const AuditResult& ar) {
    json j;
    j["trials"] = ar.trials;
    if (ar.cubic) {
        j["mean_x"] = ar.mean_x;
        j["expected_x"] = ar.expected_x;
        j["good_shortfall"] = ar.good_shortfall;
    } else {
        j["density_witnesses"] = ar.density_witnesses;
        j["density_inexact"] = ar.density_inexact;
        j["edge_span_violations"] = ar.edge_span_violations;
        j["degree_violations"] = ar.degree_violations;
    }
    return j;
}

inline const char* label_name(EdgeLabel l) {
    switch (l) {
    case EdgeLabel::Heavy: return "heavy";
    case EdgeLabel::Light: return "light";
    case EdgeLabel::Internal: return "internal";
    default: return "other";
    }
}

inline json decomposition_to_json(const Decomposition& dec) {
    json j;
    json levels = json::array();
    for (const auto& lvl : dec.levels) levels.push_back(lvl);
    j["levels"] = levels;
    json labels = json::array();
    for (const auto& [e, lab] : dec.labels)
        labels.push_back({{"u", e.first}, {"v", e.second}, {"label", label_name(lab)}});
    j["labels"] = labels;
    j["set_b"] = dec.setB;
    j["a1"] = dec.a1;
    j["ambiguous_light"] = dec.ambiguous_light;
    j["report"] = {{"complete", dec.report.complete}, {"p1", dec.report.p1},
                   {"p2", dec.report.p2},             {"p3", dec.report.p3},
                   {"p4", dec.report.p4},             {"p5", dec.report.p5},
                   {"forest", dec.report.forest},     {"ok", dec.report.ok()}};
    return j;
}

inline json h_to_json(const HSubgraph& h) {
    json j;
    j["v"] = h.v;
    j["w"] = h.w;
    json paths = json::array();
    for (const auto& p : h.paths) paths.push_back(p);
    j["paths"] = paths;
    json chords = json::array();
    for (auto [u, v] : h.chords) chords.push_back({{"u", u}, {"v", v}});
    j["chords"] = chords;
    j["pair_index"] = h.pair_index;
    return j;
}

inline json error_json(const std::string& message) { return json{{"error", message}}; }

} // namespace gcg

#endif
