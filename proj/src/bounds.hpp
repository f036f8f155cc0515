#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace pebblelab {

// One evaluated k. Bounds that do not apply at this k (or on this graph)
// stay unset and are omitted from reports.
struct BoundRow {
    int k = 0;
    int gamma_km1 = 0; // gamma_{k-1}
    int gamma_km2 = 0; // gamma_{k-2}
    std::optional<std::int64_t> thm3_rubbling_lb;
    std::optional<std::int64_t> thm5_rubbling_lb;
    std::optional<std::int64_t> thm4_mid_pebbling_lb;
    std::optional<std::int64_t> thm6_pebbling_lb;
};

struct BestBound {
    std::int64_t value = 1;
    int k = 0; // 0 when no row applied and the trivial bound 1 stands
};

struct BoundReport {
    std::string graph_name;
    std::string graph_digest; // content hash of the canonical graph text
    int n = 0;
    int diameter = 0;
    std::int64_t diameter_ub = 0; // 2^diameter
    std::vector<BoundRow> rows;
    BestBound best_rubbling;  // max over thm3/thm5 rows
    BestBound best_pebbling;  // max over all rows (a rubbling bound also bounds pebbling)
};

// Shared gamma evaluations for one graph, so a report computes each
// domination number once.
class GammaCache {
public:
    explicit GammaCache(const Graph& g) : g_(g) {}
    int get(int k);

private:
    const Graph& g_;
    std::map<int, int> values_;
};

// 2^diam(g); the single-vertex solvable distribution's size.
std::int64_t diameter_upper_bound(const Graph& g);

// min(gamma_{k-1}, 2^k); lower bound on the optimal rubbling number, k >= 2.
std::int64_t thm3_lower_bound(const Graph& g, int k, GammaCache* cache = nullptr);

// min(2^k, max(gamma_{k-1}/2 + 2^{k-2}, gamma_{k-1}), gamma_{k-2}), compared
// as exact rationals and rounded up at the end; rubbling, k >= 2.
std::int64_t thm5_rubbling_lower_bound(const Graph& g, int k, GammaCache* cache = nullptr);

// min(2^k, gamma_{k-1} + 2^{k-2}, gamma_{k-2} + 1); pebbling, k >= 3,
// at least one edge.
std::int64_t thm4_mid_lower_bound(const Graph& g, int k, GammaCache* cache = nullptr);

// min(2^k, gamma_{k-1} + 2^{k-2} + 1, gamma_{k-2} + 1); pebbling, k >= 3,
// at least one edge. Always at least the mid bound.
std::int64_t thm6_pebbling_lower_bound(const Graph& g, int k, GammaCache* cache = nullptr);

// Evaluates every applicable bound for k in [k_lo, k_hi] and selects the
// best per move system. Rows never mix ks; inapplicable bounds are omitted,
// never altered.
BoundReport best_bounds(const Graph& g, int k_lo, int k_hi);

} // namespace pebblelab
