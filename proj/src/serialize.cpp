#include "hcaudit/serialize.hpp"

#include <string>

#include "hcaudit/errors.hpp"

namespace hcaudit {

Json digraph_to_json(const Digraph& d) {
    Json arcs = Json::array();
    for (const auto& [u, v] : d.arcs()) {
        arcs.push_back(Json::array({u, v}));
    }
    return Json{{"n", d.vertex_count()}, {"arcs", std::move(arcs)}};
}

Digraph digraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs")) {
        throw Error(Errc::BadReport, "digraph object needs 'n' and 'arcs'");
    }
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
        arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    }
    return Digraph(j.at("n").get<int>(), std::move(arcs));
}

namespace {

VerdictKind verdict_kind_from_name(const std::string& name) {
    for (VerdictKind k :
         {VerdictKind::NoPerfectMatching, VerdictKind::RankDeficient,
          VerdictKind::ClaimedHamiltonian, VerdictKind::Hamiltonian,
          VerdictKind::NotHamiltonian, VerdictKind::Unknown}) {
        if (name == verdict_kind_name(k)) return k;
    }
    throw Error(Errc::BadReport, "unknown verdict kind '" + name + "'");
}

}  // namespace

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["kind"] = verdict_kind_name(v.kind);
    j["rank"] = v.rank ? Json(*v.rank) : Json(nullptr);
    j["components"] = v.components ? Json(*v.components) : Json(nullptr);
    j["witness"] = v.witness ? Json(v.witness->members) : Json(nullptr);
    j["matchings_examined"] =
        v.matchings_examined ? Json(*v.matchings_examined) : Json(nullptr);
    return j;
}

Verdict verdict_from_json(const Json& j) {
    Verdict v;
    v.kind = verdict_kind_from_name(j.at("kind").get<std::string>());
    if (j.contains("rank") && !j.at("rank").is_null()) v.rank = j.at("rank").get<int>();
    if (j.contains("components") && !j.at("components").is_null()) {
        v.components = j.at("components").get<int>();
    }
    if (j.contains("witness") && !j.at("witness").is_null()) {
        v.witness = ArcSet{j.at("witness").get<std::vector<int>>()};
    }
    if (j.contains("matchings_examined") && !j.at("matchings_examined").is_null()) {
        v.matchings_examined = j.at("matchings_examined").get<std::uint64_t>();
    }
    return v;
}

Json oracle_to_json(const OracleResult& r) {
    Json j;
    j["hamiltonian"] = r.hamiltonian;
    j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    j["method"] = oracle_method_name(r.method);
    return j;
}

OracleResult oracle_from_json(const Json& j) {
    OracleResult r;
    r.hamiltonian = j.at("hamiltonian").get<bool>();
    if (j.contains("witness") && !j.at("witness").is_null()) {
        r.witness = j.at("witness").get<std::vector<int>>();
    }
    const std::string method = j.at("method").get<std::string>();
    if (method == oracle_method_name(OracleMethod::HeldKarp)) {
        r.method = OracleMethod::HeldKarp;
    } else if (method == oracle_method_name(OracleMethod::Backtracking)) {
        r.method = OracleMethod::Backtracking;
    } else {
        throw Error(Errc::BadReport, "unknown oracle method '" + method + "'");
    }
    return r;
}

Json record_to_json(const ComparisonRecord& rec, bool include_timings) {
    Json j;
    j["instance"] = digraph_to_json(rec.instance);
    j["paper_verdict"] = verdict_to_json(rec.paper_verdict);
    j["exact_verdict"] = verdict_to_json(rec.exact_verdict);
    j["oracle"] = rec.oracle ? oracle_to_json(*rec.oracle) : Json(nullptr);
    j["oracle_skipped"] = !rec.oracle.has_value();
    if (rec.oracle_nodes > 0) j["oracle_nodes"] = rec.oracle_nodes;
    j["discrepancy"] = rec.discrepancy ? Json(*rec.discrepancy) : Json(nullptr);
    if (include_timings) {
        j["timings"] = Json{{"paper_ms", rec.timings.paper_ms},
                            {"exact_ms", rec.timings.exact_ms},
                            {"oracle_ms", rec.timings.oracle_ms}};
    }
    return j;
}

}  // namespace hcaudit
