#include "bounds.hpp"

#include <algorithm>

#include "domination.hpp"
#include "text_io.hpp"

namespace pebblelab {

namespace {

constexpr int kMaxExponent = 60;

std::int64_t pow2(int k) {
    if (k < 0 || k > kMaxExponent)
        throw SizeBudgetError("2^" + std::to_string(k) + " exceeds the supported range");
    return std::int64_t{1} << k;
}

void check_k(int k, int minimum) {
    if (k < minimum)
        throw ValidationError("bound requires k >= " + std::to_string(minimum));
    if (k > kMaxExponent)
        throw SizeBudgetError("bound exponent k too large");
}

void check_has_edge(const Graph& g) {
    if (g.edge_count() == 0)
        throw ValidationError("bound requires a graph with at least one edge");
}

int gamma_value(const Graph& g, int k, GammaCache* cache) {
    if (cache) return cache->get(k);
    return gamma(g, k).gamma;
}

} // namespace

int GammaCache::get(int k) {
    auto it = values_.find(k);
    if (it != values_.end()) return it->second;
    int v = gamma(g_, k).gamma;
    values_.emplace(k, v);
    return v;
}

std::int64_t diameter_upper_bound(const Graph& g) {
    return pow2(g.diameter());
}

std::int64_t thm3_lower_bound(const Graph& g, int k, GammaCache* cache) {
    check_k(k, 2);
    return std::min<std::int64_t>(gamma_value(g, k - 1, cache), pow2(k));
}

std::int64_t thm5_rubbling_lower_bound(const Graph& g, int k, GammaCache* cache) {
    check_k(k, 2);
    std::int64_t g1 = gamma_value(g, k - 1, cache);
    std::int64_t g2 = gamma_value(g, k - 2, cache);
    // evaluate in halves so gamma_{k-1}/2 stays exact, then round up
    std::int64_t half_term = g1 + 2 * pow2(k - 2); // 2 * (g1/2 + 2^{k-2})
    std::int64_t doubled = std::min({2 * pow2(k), std::max(half_term, 2 * g1), 2 * g2});
    return (doubled + 1) / 2;
}

std::int64_t thm4_mid_lower_bound(const Graph& g, int k, GammaCache* cache) {
    check_k(k, 3);
    check_has_edge(g);
    std::int64_t g1 = gamma_value(g, k - 1, cache);
    std::int64_t g2 = gamma_value(g, k - 2, cache);
    return std::min({pow2(k), g1 + pow2(k - 2), g2 + 1});
}

std::int64_t thm6_pebbling_lower_bound(const Graph& g, int k, GammaCache* cache) {
    check_k(k, 3);
    check_has_edge(g);
    std::int64_t g1 = gamma_value(g, k - 1, cache);
    std::int64_t g2 = gamma_value(g, k - 2, cache);
    return std::min({pow2(k), g1 + pow2(k - 2) + 1, g2 + 1});
}

BoundReport best_bounds(const Graph& g, int k_lo, int k_hi) {
    if (k_lo < 2)
        throw ValidationError("bound range starts at k = 2");
    if (k_hi < k_lo)
        throw ValidationError("empty bound range");
    if (k_hi > kMaxExponent)
        throw SizeBudgetError("bound exponent k too large");

    BoundReport report;
    report.graph_name = g.name();
    report.graph_digest = graph_digest(g);
    report.n = g.vertex_count();
    report.diameter = g.diameter();
    report.diameter_ub = diameter_upper_bound(g);

    GammaCache cache(g);
    bool has_edge = g.edge_count() > 0;

    // strictly greater wins, so the smallest k keeps ties
    auto consider = [](BestBound& best, std::int64_t value, int k) {
        if (best.k == 0 || value > best.value) {
            best.value = value;
            best.k = k;
        }
    };

    for (int k = k_lo; k <= k_hi; ++k) {
        BoundRow row;
        row.k = k;
        row.gamma_km1 = cache.get(k - 1);
        row.gamma_km2 = cache.get(k - 2);
        row.thm3_rubbling_lb = thm3_lower_bound(g, k, &cache);
        row.thm5_rubbling_lb = thm5_rubbling_lower_bound(g, k, &cache);
        if (k >= 3 && has_edge) {
            row.thm4_mid_pebbling_lb = thm4_mid_lower_bound(g, k, &cache);
            row.thm6_pebbling_lb = thm6_pebbling_lower_bound(g, k, &cache);
        }

        consider(report.best_rubbling, *row.thm3_rubbling_lb, k);
        consider(report.best_rubbling, *row.thm5_rubbling_lb, k);
        consider(report.best_pebbling, *row.thm3_rubbling_lb, k);
        consider(report.best_pebbling, *row.thm5_rubbling_lb, k);
        if (row.thm4_mid_pebbling_lb)
            consider(report.best_pebbling, *row.thm4_mid_pebbling_lb, k);
        if (row.thm6_pebbling_lb)
            consider(report.best_pebbling, *row.thm6_pebbling_lb, k);

        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace pebblelab
