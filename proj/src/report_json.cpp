#include "svcp/report_json.hpp"

namespace svcp {

Json to_json(VertexSet s) { return Json(one_based(s)); }

Json to_json(const std::vector<VertexSet>& sets) {
    Json out = Json::array();
    for (VertexSet s : sets) out.push_back(to_json(s));
    return out;
}

Json to_json(const Distribution& d) { return Json(std::vector<int>(d.counts().begin(), d.counts().end())); }

Json to_json(const MoveCertificate& c) {
    Json out = Json::array();
    for (const Move& m : c.moves) out.push_back(Json::array({m.from, m.to}));
    return out;
}

Json to_json(const FormulaResult& r) {
    Json j;
    j["family"] = describe(r.family);
    j["invariant"] = r.invariant;
    j["formula"] = r.formula;
    j["applicable"] = r.applicable;
    if (r.value) {
        // Small values as numbers, anything beyond 53 bits as a decimal string.
        if (*r.value <= BigInt(1LL << 53) && *r.value >= -BigInt(1LL << 53))
            j["value"] = r.value->convert_to<long long>();
        else
            j["value"] = r.value->str();
    } else {
        j["value"] = nullptr;
    }
    if (r.upper_bound) j["upper_bound"] = true;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json to_json(const InvariantReport& r, bool include_timing) {
    Json j;
    j["invariant"] = invariant_name(r.invariant);
    j["value"] = r.value;
    j["witness"] = r.witness_unsolvable ? to_json(*r.witness_unsolvable) : Json(nullptr);
    j["scan_start"] = r.scan_start;
    j["hardest"] = r.hardest ? to_json(*r.hardest) : Json(nullptr);
    j["certificate"] = r.sample_certificate ? to_json(*r.sample_certificate) : Json(nullptr);
    Json stats;
    stats["distributions_examined"] = r.stats.distributions_examined;
    stats["pretest_hits"] = r.stats.pretest_hits;
    stats["states_expanded"] = r.stats.states_expanded;
    stats["levels_scanned"] = r.stats.levels_scanned;
    if (include_timing) stats["wall_seconds"] = r.stats.wall_seconds;
    j["stats"] = stats;
    return j;
}

Json to_json(const SandwichReport& r, bool include_timing) {
    Json j;
    j["n"] = r.order;
    j["diameter"] = r.diameter;
    j["sigma"] = r.sigma.value;
    j["f_svcp"] = r.f_svcp.value;
    j["gamma"] = r.gamma.value;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["sandwich_holds"] = r.sandwich_holds;
    j["bounds_hold"] = r.bounds_hold;
    j["violations"] = r.violations;
    if (include_timing) {
        j["reports"] = {{"sigma", to_json(r.sigma, true)}, {"f_svcp", to_json(r.f_svcp, true)}, {"gamma", to_json(r.gamma, true)}};
    }
    return j;
}

Json to_json(const CorrespondenceReport& r) {
    Json j;
    j["subsets_checked"] = r.subsets_checked;
    j["holds"] = r.holds();
    Json cex = Json::array();
    for (const auto& v : r.violations)
        cex.push_back({{"subset", to_json(v.subset)}, {"is_vertex_cover", v.is_vertex_cover}, {"lifted_is_secure", v.lifted_is_secure}});
    j["counterexamples"] = cex;
    return j;
}

Json to_json(const ApexProbe& p) {
    Json j;
    j["k"] = p.k;
    j["alpha_s_source"] = p.alpha_s_source;
    j["oracle_f_svcp"] = p.oracle;
    j["claimed_window"] = p.claimed;
    j["in_claimed_window"] = p.in_claimed_window;
    j["alternate_value"] = p.alternate;
    j["matches_alternate"] = p.matches_alternate;
    return j;
}

Json graph_summary(const Graph& g) {
    Json j;
    j["n"] = g.order();
    j["edges"] = g.edge_count();
    return j;
}

}  // namespace svcp
