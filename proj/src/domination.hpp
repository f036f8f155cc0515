#pragma once

#include "graph.hpp"
#include "vertex_set.hpp"

namespace pebblelab {

struct DominationCertificate {
    int k = 0;
    int gamma = 0;
    VertexSet set;             // lexicographically smallest optimal set
    bool proved_optimal = false; // every smaller size was searched and rejected
};

// True iff every vertex of g is within distance k of some member of s.
bool is_distance_k_dominating(const Graph& g, const VertexSet& s, int k);

// Exact distance-k domination number with a witnessing set.
// gamma_0 = n; gamma_k = 1 once k reaches the radius.
DominationCertificate gamma(const Graph& g, int k);

} // namespace pebblelab
