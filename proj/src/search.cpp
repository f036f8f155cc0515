#include "search.hpp"

#include <algorithm>

#include "bounds.hpp"

namespace pebblelab {

DistributionEnumerator::DistributionEnumerator(const Graph& g, int size,
                                               EnumerationFilters filters)
    : g_(g), size_(size), filters_(filters) {
    if (size < 0)
        throw ValidationError("distribution size must be nonnegative");
    if (size > kMaxTotalPebbles)
        throw SizeBudgetError("distribution size may not exceed " +
                              std::to_string(kMaxTotalPebbles) + " pebbles");
    counts_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    counts_[0] = size;
    byte_counts_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    weight_scratch_.assign(static_cast<std::size_t>(g.diameter()) + 1, 0);
}

// Successor in descending lexicographic order: decrement the rightmost
// nonzero position that is not the last, move everything to its right
// (plus one) into the next position.
bool DistributionEnumerator::advance_raw() {
    if (fresh_) {
        fresh_ = false;
        ++raw_;
        return true;
    }
    int n = static_cast<int>(counts_.size());
    int i = -1;
    int tail = 0;
    for (int j = n - 1; j >= 0; --j) {
        if (j != n - 1 && counts_[static_cast<std::size_t>(j)] > 0) {
            i = j;
            break;
        }
        tail += counts_[static_cast<std::size_t>(j)];
    }
    if (i < 0) return false;
    counts_[static_cast<std::size_t>(i)] -= 1;
    for (int j = i + 1; j < n; ++j) counts_[static_cast<std::size_t>(j)] = 0;
    counts_[static_cast<std::size_t>(i) + 1] = tail + 1;
    ++raw_;
    return true;
}

bool DistributionEnumerator::passes_filters() {
    int n = static_cast<int>(counts_.size());
    if (filters_.pebbling_support) {
        bool all_single = true;
        bool has_empty = false;
        for (int v = 0; v < n; ++v) {
            if (counts_[static_cast<std::size_t>(v)] > 1) all_single = false;
            if (counts_[static_cast<std::size_t>(v)] == 0) has_empty = true;
        }
        if (all_single && has_empty) return false;
    }
    if (filters_.weight) {
        for (int v = 0; v < n; ++v)
            byte_counts_[static_cast<std::size_t>(v)] =
                static_cast<std::uint8_t>(counts_[static_cast<std::size_t>(v)]);
        for (int u = 0; u < n; ++u)
            if (!weight_at_least_one_raw(g_, byte_counts_, u, weight_scratch_)) return false;
    }
    return true;
}

bool DistributionEnumerator::next(Distribution& out) {
    if (done_) return false;
    while (advance_raw()) {
        if (!passes_filters()) continue;
        Distribution d(g_.vertex_count());
        for (int v = 0; v < g_.vertex_count(); ++v)
            d.set_count(v, counts_[static_cast<std::size_t>(v)]);
        out = std::move(d);
        return true;
    }
    done_ = true;
    return false;
}

namespace {

struct SeedWitness {
    int size = 0;
    Distribution dist;
    SolvableReport report;
};

// Best theorem lower bound over the configured k range for the move system.
std::optional<TheoremRef> best_theorem_bound(const Graph& g, MoveSystem sys, int k_lo, int k_hi) {
    GammaCache cache(g);
    std::optional<TheoremRef> best;
    auto consider = [&](const char* name, int k, std::int64_t value) {
        if (!best || value > best->value) best = TheoremRef{name, k, value};
    };
    bool has_edge = g.edge_count() > 0;
    for (int k = std::max(2, k_lo); k <= k_hi; ++k) {
        consider("thm3_rubbling_lb", k, thm3_lower_bound(g, k, &cache));
        consider("thm5_rubbling_lb", k, thm5_rubbling_lower_bound(g, k, &cache));
        if (sys == MoveSystem::pebbling_only && k >= 3 && has_edge) {
            consider("thm4_mid_pebbling_lb", k, thm4_mid_lower_bound(g, k, &cache));
            consider("thm6_pebbling_lb", k, thm6_pebbling_lower_bound(g, k, &cache));
        }
    }
    return best;
}

// 2^ecc pebbles on a lowest-eccentricity vertex; always solvable when it
// fits the pebble budget.
std::optional<Distribution> center_seed(const Graph& g) {
    int e = g.radius();
    if (e > 7) return std::nullopt; // 2^e would exceed the count budget
    return Distribution::single(g.vertex_count(), g.center_vertex(), 1 << e);
}

Distribution lift_counts(const Graph& g, const Distribution& p, int layer_width) {
    Distribution lifted(g.vertex_count() * layer_width);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (p.count(v) > 0) lifted.set_count(v * layer_width, 2 * p.count(v));
    return lifted;
}

} // namespace

OptimumCertificate optimal_number(const Graph& g, MoveSystem sys, const SearchOptions& opts) {
    ReachSolver solver(g);
    std::uint64_t extra_queries = 0; // spent in recursive factor searches
    auto used = [&] { return solver.queries_used() + extra_queries; };

    int k_hi = opts.k_hi > 0 ? opts.k_hi : g.diameter() + 1;
    std::optional<TheoremRef> theorem;
    if (opts.theorem_bounds && k_hi >= 2)
        theorem = best_theorem_bound(g, sys, opts.k_lo, k_hi);

    // size 0 is the empty distribution, never solvable on a nonempty graph,
    // so the scan may always start at 1
    std::int64_t lb = std::max<std::int64_t>(1, theorem ? theorem->value : 1);
    int lower = static_cast<int>(std::min<std::int64_t>(lb, kMaxTotalPebbles));

    std::optional<SeedWitness> seed;
    if (opts.seed_upper_bound) {
        if (auto d = center_seed(g)) {
            SolvableReport rep = solver.solvable(*d, sys);
            if (rep.solvable) seed = SeedWitness{d->total(), *d, std::move(rep)};
        }
        // a product with a complete graph: double the left factor's optimal
        // distribution into layer 0
        const Graph* left = g.left_factor();
        const Graph* right = g.right_factor();
        bool right_complete = right && right->vertex_count() >= 2 &&
                              right->edge_count() ==
                                  static_cast<std::int64_t>(right->vertex_count()) *
                                      (right->vertex_count() - 1) / 2;
        if (left && right_complete && (!seed || lower < seed->size)) {
            SearchOptions sub = opts;
            sub.budget = opts.budget > used() ? (opts.budget - used()) / 2 : 0;
            try {
                OptimumCertificate factor = optimal_number(*left, sys, sub);
                extra_queries += factor.queries_used;
                if (2 * factor.value <= kMaxTotalPebbles &&
                    (!seed || 2 * factor.value < seed->size)) {
                    Distribution lifted =
                        lift_counts(*left, factor.witness, right->vertex_count());
                    SolvableReport rep = solver.solvable(lifted, sys);
                    if (rep.solvable)
                        seed = SeedWitness{lifted.total(), lifted, std::move(rep)};
                }
            } catch (const InconclusiveError& e) {
                // factor search ran out of its budget share; skip this seed
                extra_queries += e.queries_used();
            }
        }
    }

    auto make_certificate = [&](int value, Distribution dist, SolvableReport rep,
                                EvidenceKind evidence, int enumerated_from) {
        OptimumCertificate cert(sys, value, std::move(dist));
        cert.witness_solutions.reserve(rep.per_vertex.size());
        for (auto& r : rep.per_vertex) cert.witness_solutions.push_back(std::move(*r));
        cert.evidence = evidence;
        cert.enumerated_from = enumerated_from;
        cert.theorem = theorem;
        cert.queries_used = used();
        return cert;
    };

    if (seed && seed->size <= lower) {
        // the theorem bound (or the trivial bound 1) already meets the seeded
        // witness; enumeration of smaller sizes is skipped entirely
        EvidenceKind ev = theorem && theorem->value >= seed->size
                              ? EvidenceKind::theorem_bound
                              : EvidenceKind::exhausted_all_smaller; // value 1: vacuous
        return make_certificate(seed->size, seed->dist, std::move(seed->report), ev, 0);
    }

    EnumerationFilters filters =
        opts.filters ? EnumerationFilters::for_system(sys) : EnumerationFilters::none();

    for (int size = lower;; ++size) {
        if (seed && size >= seed->size) {
            // every size in [lower, seed->size) was enumerated and rejected
            return make_certificate(seed->size, seed->dist, std::move(seed->report),
                                    EvidenceKind::exhausted_all_smaller, lower);
        }
        if (size > kMaxTotalPebbles)
            throw InconclusiveError(size, std::nullopt, used());
        DistributionEnumerator en(g, size, filters);
        Distribution candidate(g.vertex_count());
        while (en.next(candidate)) {
            if (used() >= opts.budget) {
                throw InconclusiveError(
                    size, seed ? std::optional<std::int64_t>(seed->size) : std::nullopt,
                    used());
            }
            SolvableReport rep = solver.solvable(candidate, sys);
            if (rep.solvable) {
                EvidenceKind ev = size == lower && theorem && theorem->value == size
                                      ? EvidenceKind::theorem_bound
                                      : EvidenceKind::exhausted_all_smaller;
                return make_certificate(size, candidate, std::move(rep), ev, lower);
            }
        }
    }
}

LiftResult lift_through_product(const Graph& g, const Distribution& p, int n, MoveSystem sys) {
    if (n < 1)
        throw ValidationError("lift layer count must be at least one");
    if (p.vertex_count() != g.vertex_count())
        throw ValidationError("distribution does not match graph");
    if (!solvable(g, p, sys).solvable)
        throw ValidationError("lift requires a solvable input distribution");
    Graph layers = build_complete(n);
    Graph product = cartesian_product(g, layers,
                                      std::max(kDefaultVertexBudget, g.vertex_count() * n));
    Distribution lifted = lift_counts(g, p, n);
    return LiftResult{std::move(product), std::move(lifted)};
}

} // namespace pebblelab
