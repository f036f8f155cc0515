#include "pebblelab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "bounds.hpp"
#include "distribution.hpp"
#include "domination.hpp"
#include "graph.hpp"
#include "json_io.hpp"
#include "reachability.hpp"
#include "search.hpp"
#include "text_io.hpp"
#include "verify.hpp"
#include "version.hpp"

struct plab_graph {
    pebblelab::Graph g;
};

struct plab_dist {
    pebblelab::Distribution d;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

plab_status status_of(const pebblelab::Error& e) {
    using Kind = pebblelab::Error::Kind;
    switch (e.kind()) {
        case Kind::invalid_argument: return PLAB_ERR_INVALID;
        case Kind::parse: return PLAB_ERR_PARSE;
        case Kind::size_budget: return PLAB_ERR_SIZE;
        case Kind::inconclusive: return PLAB_INCONCLUSIVE;
    }
    return PLAB_ERR_INTERNAL;
}

// Runs f, routing exceptions into status codes and g_last_error.
template <typename F>
plab_status guarded(F&& f) {
    try {
        return f();
    } catch (const pebblelab::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PLAB_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return PLAB_ERR_INTERNAL;
    }
}

plab_status require(bool ok, const char* message) {
    if (ok) return PLAB_OK;
    g_last_error = message;
    return PLAB_ERR_INVALID;
}

pebblelab::MoveSystem to_system(plab_move_system sys) {
    return sys == PLAB_PEBBLING ? pebblelab::MoveSystem::pebbling_only
                                : pebblelab::MoveSystem::rubbling;
}

plab_status emit(const pebblelab::ojson& doc, char** out_json) {
    *out_json = dup_string(doc.dump(2));
    if (*out_json) return PLAB_OK;
    g_last_error = "out of memory";
    return PLAB_ERR_INTERNAL;
}

} // namespace

extern "C" {

const char* plab_version(void) { return pebblelab::kEngineVersion; }

const char* plab_last_error(void) { return g_last_error.c_str(); }

void plab_string_free(char* s) { std::free(s); }

plab_status plab_graph_from_text(const char* text, int vertex_budget, plab_graph** out) {
    if (plab_status st = require(text && out, "null argument"); st != PLAB_OK) return st;
    *out = nullptr;
    return guarded([&] {
        int budget = vertex_budget > 0 ? vertex_budget : pebblelab::kDefaultVertexBudget;
        *out = new plab_graph{pebblelab::load_graph(text, budget)};
        return PLAB_OK;
    });
}

plab_status plab_graph_to_text(const plab_graph* g, char** out) {
    if (plab_status st = require(g && out, "null argument"); st != PLAB_OK) return st;
    return guarded([&] {
        *out = dup_string(pebblelab::save_graph(g->g));
        return *out ? PLAB_OK : PLAB_ERR_INTERNAL;
    });
}

plab_status plab_graph_stats_json(const plab_graph* g, char** out_json) {
    if (plab_status st = require(g && out_json, "null argument"); st != PLAB_OK) return st;
    return guarded([&] { return emit(pebblelab::stats_to_json(g->g), out_json); });
}

int plab_graph_vertex_count(const plab_graph* g) { return g ? g->g.vertex_count() : 0; }

int64_t plab_graph_edge_count(const plab_graph* g) { return g ? g->g.edge_count() : 0; }

int plab_graph_diameter(const plab_graph* g) { return g ? g->g.diameter() : -1; }

void plab_graph_free(plab_graph* g) { delete g; }

plab_status plab_dist_from_text(const plab_graph* g, const char* text, plab_dist** out) {
    if (plab_status st = require(g && text && out, "null argument"); st != PLAB_OK) return st;
    *out = nullptr;
    return guarded([&] {
        *out = new plab_dist{pebblelab::load_distribution(text, g->g)};
        return PLAB_OK;
    });
}

plab_status plab_dist_to_json(const plab_dist* d, char** out_json) {
    if (plab_status st = require(d && out_json, "null argument"); st != PLAB_OK) return st;
    return guarded([&] { return emit(pebblelab::distribution_to_json(d->d), out_json); });
}

int plab_dist_total(const plab_dist* d) { return d ? d->d.total() : 0; }

void plab_dist_free(plab_dist* d) { delete d; }

plab_status plab_reach_json(const plab_graph* g, const plab_dist* d, int target,
                            plab_move_system sys, char** out_json) {
    if (plab_status st = require(g && d && out_json, "null argument"); st != PLAB_OK) return st;
    return guarded([&] {
        pebblelab::ReachResult r =
            pebblelab::reachable(g->g, d->d, target, to_system(sys));
        return emit(pebblelab::reach_to_json(g->g, d->d, target, to_system(sys), r), out_json);
    });
}

plab_status plab_solvable_json(const plab_graph* g, const plab_dist* d,
                               plab_move_system sys, char** out_json) {
    if (plab_status st = require(g && d && out_json, "null argument"); st != PLAB_OK) return st;
    return guarded([&] {
        pebblelab::SolvableReport rep = pebblelab::solvable(g->g, d->d, to_system(sys));
        return emit(pebblelab::solvable_to_json(d->d, to_system(sys), rep), out_json);
    });
}

plab_status plab_gamma_json(const plab_graph* g, int k, char** out_json) {
    if (plab_status st = require(g && out_json, "null argument"); st != PLAB_OK) return st;
    return guarded([&] {
        pebblelab::DominationCertificate cert = pebblelab::gamma(g->g, k);
        return emit(pebblelab::gamma_to_json(cert), out_json);
    });
}

plab_status plab_bounds_json(const plab_graph* g, int k_lo, int k_hi, char** out_json) {
    if (plab_status st = require(g && out_json, "null argument"); st != PLAB_OK) return st;
    return guarded([&] {
        pebblelab::BoundReport report = pebblelab::best_bounds(g->g, k_lo, k_hi);
        return emit(pebblelab::bounds_to_json(report), out_json);
    });
}

plab_status plab_optimal_json(const plab_graph* g, plab_move_system sys, uint64_t budget,
                              int k_lo, int k_hi, int no_filters, char** out_json) {
    if (plab_status st = require(g && out_json, "null argument"); st != PLAB_OK) return st;
    return guarded([&] {
        pebblelab::SearchOptions opts;
        if (budget > 0) opts.budget = budget;
        if (k_lo >= 2) opts.k_lo = k_lo;
        if (k_hi >= 2) opts.k_hi = k_hi;
        if (no_filters) {
            opts.filters = false;
            opts.theorem_bounds = false;
        }
        try {
            pebblelab::OptimumCertificate cert =
                pebblelab::optimal_number(g->g, to_system(sys), opts);
            return emit(pebblelab::optimum_to_json(cert), out_json);
        } catch (const pebblelab::InconclusiveError& e) {
            pebblelab::ojson j;
            j["system"] = pebblelab::system_name(to_system(sys));
            j["inconclusive"] = true;
            j["bracket"] = pebblelab::ojson{{"lower", e.lower_bound()}};
            if (e.upper_bound())
                j["bracket"]["upper"] = *e.upper_bound();
            j["queries_used"] = e.queries_used();
            plab_status st = emit(j, out_json);
            if (st != PLAB_OK) return st;
            g_last_error = e.what();
            return PLAB_INCONCLUSIVE;
        }
    });
}

plab_status plab_verify_paper_json(int no_filters, char** out_json) {
    if (plab_status st = require(out_json != nullptr, "null argument"); st != PLAB_OK) return st;
    return guarded([&] {
        pebblelab::VerifyReport report = pebblelab::verify_paper(no_filters == 0);
        return emit(pebblelab::verify_report_to_json(report), out_json);
    });
}

} // extern "C"
