#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "distribution.hpp"
#include "graph.hpp"
#include "reachability.hpp"

namespace pebblelab {

struct EnumerationFilters {
    // skip distributions leaving some vertex with weight < 1 (never solvable)
    bool weight = false;
    // pebbling only: skip all-counts-<=-1 distributions with an empty vertex
    // (no move is available and the empty vertex has no pebble)
    bool pebbling_support = false;

    static EnumerationFilters none() { return {}; }
    static EnumerationFilters for_system(MoveSystem sys) {
        return {true, sys == MoveSystem::pebbling_only};
    }
};

// Streams every multiset of `size` pebbles over the vertices of g exactly
// once, in descending lexicographic count-vector order starting from
// (size, 0, ..., 0). Filters drop provably unsolvable distributions.
class DistributionEnumerator {
public:
    DistributionEnumerator(const Graph& g, int size, EnumerationFilters filters);

    // Advances to the next (surviving) distribution. False once exhausted.
    bool next(Distribution& out);

    // Multisets produced so far before filtering.
    std::uint64_t raw_count() const { return raw_; }

private:
    bool advance_raw();
    bool passes_filters();

    const Graph& g_;
    int size_;
    EnumerationFilters filters_;
    std::vector<int> counts_;
    bool fresh_ = true;
    bool done_ = false;
    std::uint64_t raw_ = 0;
    std::vector<std::int64_t> weight_scratch_;
    std::vector<std::uint8_t> byte_counts_;
};

enum class EvidenceKind {
    exhausted_all_smaller, // enumeration rejected every smaller size
    theorem_bound,         // a bounds-module theorem already meets the value
};

struct TheoremRef {
    std::string name; // report key of the bound, e.g. "thm6_pebbling_lb"
    int k = 0;
    std::int64_t value = 0;
};

struct OptimumCertificate {
    OptimumCertificate(MoveSystem system, int value, Distribution witness)
        : system(system), value(value), witness(std::move(witness)) {}

    MoveSystem system;
    int value;
    Distribution witness;
    // per-vertex solutions replaying from `witness`, indexed by vertex
    std::vector<ReachResult> witness_solutions;
    EvidenceKind evidence = EvidenceKind::exhausted_all_smaller;
    int enumerated_from = 0;          // first size enumerated (0 = none)
    std::optional<TheoremRef> theorem; // best theorem bound, when one was used
    std::uint64_t queries_used = 0;
};

struct SearchOptions {
    std::uint64_t budget = 10'000'000; // reachability-query budget
    bool filters = true;               // enumeration filters
    bool theorem_bounds = true;        // start the scan at the best theorem bound
    bool seed_upper_bound = true;      // try cheap known-solvable distributions first
    int k_lo = 2;
    int k_hi = 0; // 0 = diameter + 1
};

// Exact optimal pebbling (pebbling_only) or rubbling (rubbling) number with a
// certificate. Sizes are scanned in ascending order; the first solvable
// distribution ends the search. Throws InconclusiveError with the best-known
// bracket when the query budget runs out first.
OptimumCertificate optimal_number(const Graph& g, MoveSystem sys, const SearchOptions& opts = {});

struct LiftResult {
    Graph product; // g box K_n
    Distribution dist;
};

// Doubles a solvable distribution into layer 0 of g box K_n: vertex (v, 0)
// receives 2 * p(v). The result is solvable under the same move system.
// Rejects p when it is not solvable on g.
LiftResult lift_through_product(const Graph& g, const Distribution& p, int n, MoveSystem sys);

} // namespace pebblelab
