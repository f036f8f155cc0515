#include "json_io.hpp"

#include <cstdio>
#include <map>

#include "text_io.hpp"

namespace pebblelab {

const char* system_name(MoveSystem sys) {
    return sys == MoveSystem::pebbling_only ? "pebbling" : "rubbling";
}

MoveSystem system_from_name(const std::string& name) {
    if (name == "pebbling") return MoveSystem::pebbling_only;
    if (name == "rubbling") return MoveSystem::rubbling;
    throw ValidationError("unknown move system '" + name + "' (pebbling|rubbling)");
}

ojson dyadic_to_json(const Dyadic& d) {
    ojson j;
    if (d.mantissa_fits_u64())
        j["num"] = d.mantissa_u64();
    else
        j["num"] = d.mantissa_decimal(); // too wide for a JSON integer
    j["log2_den"] = d.log2_den();
    return j;
}

ojson move_to_json(const Move& m) {
    ojson j;
    if (m.kind == MoveKind::pebbling) {
        j["type"] = "pebbling";
        j["from"] = m.from1;
        j["to"] = m.to;
    } else {
        j["type"] = "rubbling";
        j["from1"] = m.from1;
        j["from2"] = m.from2;
        j["to"] = m.to;
    }
    return j;
}

ojson distribution_to_json(const Distribution& d) {
    ojson j;
    j["n"] = d.vertex_count();
    j["counts"] = ojson::array();
    for (int v = 0; v < d.vertex_count(); ++v) j["counts"].push_back(d.count(v));
    j["size"] = d.total();
    return j;
}

ojson stats_to_json(const Graph& g) {
    ojson j;
    if (!g.name().empty()) j["name"] = g.name();
    j["digest"] = graph_digest(g);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["diameter"] = g.diameter();
    j["radius"] = g.radius();
    std::map<int, int> histogram;
    for (int v = 0; v < g.vertex_count(); ++v) histogram[g.degree(v)] += 1;
    j["degree_histogram"] = ojson::array();
    for (auto [degree, count] : histogram)
        j["degree_histogram"].push_back(ojson{{"degree", degree}, {"count", count}});
    return j;
}

namespace {

ojson reach_result_to_json(const ReachResult& r) {
    ojson j;
    j["reachable"] = r.reachable;
    if (r.reachable) {
        j["witness"] = ojson::array();
        for (const Move& m : r.witness) j["witness"].push_back(move_to_json(m));
    } else {
        j["reason"] = r.reason == UnreachableReason::weight_pruned ? "weight-pruned"
                                                                   : "search-exhausted";
    }
    return j;
}

} // namespace

ojson reach_to_json(const Graph& g, const Distribution& p, int target, MoveSystem sys,
                    const ReachResult& r) {
    ojson j;
    j["target"] = target;
    j["system"] = system_name(sys);
    j["size"] = p.total();
    j["weight"] = dyadic_to_json(weight(g, p, target));
    ojson inner = reach_result_to_json(r);
    for (auto& [key, value] : inner.items()) j[key] = value;
    return j;
}

ojson solvable_to_json(const Distribution& p, MoveSystem sys, const SolvableReport& rep) {
    ojson j;
    j["system"] = system_name(sys);
    j["size"] = p.total();
    j["solvable"] = rep.solvable;
    if (!rep.solvable) j["failing_vertex"] = rep.failing_vertex;
    j["per_vertex"] = ojson::array();
    for (int v = 0; v < static_cast<int>(rep.per_vertex.size()); ++v) {
        const auto& r = rep.per_vertex[static_cast<std::size_t>(v)];
        if (!r) continue; // skipped after the first failure
        ojson row;
        row["vertex"] = v;
        ojson inner = reach_result_to_json(*r);
        for (auto& [key, value] : inner.items()) row[key] = value;
        j["per_vertex"].push_back(std::move(row));
    }
    return j;
}

ojson gamma_to_json(const DominationCertificate& cert) {
    ojson j;
    j["k"] = cert.k;
    j["gamma"] = cert.gamma;
    j["set"] = cert.set.members();
    j["proved_optimal"] = cert.proved_optimal;
    j["lower_bound_proof"] = cert.proved_optimal ? "exhausted-all-smaller" : "none";
    return j;
}

ojson bounds_to_json(const BoundReport& report) {
    ojson j;
    ojson graph;
    if (!report.graph_name.empty()) graph["name"] = report.graph_name;
    graph["digest"] = report.graph_digest;
    graph["n"] = report.n;
    j["graph"] = graph;
    j["diameter"] = report.diameter;
    j["diameter_ub"] = report.diameter_ub;
    j["rounding"] = "ceil";
    j["rows"] = ojson::array();
    for (const BoundRow& row : report.rows) {
        ojson r;
        r["k"] = row.k;
        r["gamma_km1"] = row.gamma_km1;
        r["gamma_km2"] = row.gamma_km2;
        if (row.thm3_rubbling_lb) r["thm3_rubbling_lb"] = *row.thm3_rubbling_lb;
        if (row.thm5_rubbling_lb) r["thm5_rubbling_lb"] = *row.thm5_rubbling_lb;
        if (row.thm4_mid_pebbling_lb) r["thm4_mid_pebbling_lb"] = *row.thm4_mid_pebbling_lb;
        if (row.thm6_pebbling_lb) r["thm6_pebbling_lb"] = *row.thm6_pebbling_lb;
        j["rows"].push_back(std::move(r));
    }
    j["best_rubbling_lb"] = ojson{{"value", report.best_rubbling.value},
                                  {"k", report.best_rubbling.k}};
    j["best_pebbling_lb"] = ojson{{"value", report.best_pebbling.value},
                                  {"k", report.best_pebbling.k}};
    return j;
}

ojson optimum_to_json(const OptimumCertificate& cert) {
    ojson j;
    j["system"] = system_name(cert.system);
    j["value"] = cert.value;
    j["witness_distribution"] = distribution_to_json(cert.witness);
    j["witness_solutions"] = ojson::array();
    for (int v = 0; v < static_cast<int>(cert.witness_solutions.size()); ++v) {
        const ReachResult& r = cert.witness_solutions[static_cast<std::size_t>(v)];
        ojson row;
        row["vertex"] = v;
        row["moves"] = ojson::array();
        for (const Move& m : r.witness) row["moves"].push_back(move_to_json(m));
        j["witness_solutions"].push_back(std::move(row));
    }
    ojson ev;
    if (cert.evidence == EvidenceKind::theorem_bound) {
        ev["type"] = "theorem-bound";
        ev["theorem"] = cert.theorem->name;
        ev["k"] = cert.theorem->k;
    } else {
        ev["type"] = "exhausted-all-smaller";
        ev["enumerated_from"] = cert.enumerated_from;
        if (cert.theorem && cert.theorem->value > 1) {
            ev["theorem_floor"] = ojson{{"theorem", cert.theorem->name},
                                        {"k", cert.theorem->k},
                                        {"value", cert.theorem->value}};
        }
    }
    j["lower_bound_evidence"] = std::move(ev);
    j["queries_used"] = cert.queries_used;
    return j;
}

} // namespace pebblelab
