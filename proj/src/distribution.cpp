#include "distribution.hpp"

namespace pebblelab {

bool is_valid_move(const Graph& g, const Move& m) {
    auto in_range = [&](int v) { return v >= 0 && v < g.vertex_count(); };
    if (m.kind == MoveKind::pebbling) {
        return in_range(m.from1) && in_range(m.to) && g.adjacent(m.from1, m.to);
    }
    return in_range(m.from1) && in_range(m.from2) && in_range(m.to) &&
           m.from1 != m.from2 && g.adjacent(m.from1, m.to) && g.adjacent(m.from2, m.to);
}

void require_valid_move(const Graph& g, const Move& m) {
    if (is_valid_move(g, m)) return;
    if (m.kind == MoveKind::pebbling)
        throw ValidationError("invalid pebbling move: source and target must be adjacent");
    throw ValidationError(
        "invalid strict rubbling move: sources must be distinct and share the target as a neighbor");
}

bool is_allowed(const Graph& g, const Distribution& p, const Move& m, MoveSystem sys) {
    require_valid_move(g, m);
    if (m.kind == MoveKind::pebbling) return p.count(m.from1) >= 2;
    return sys == MoveSystem::rubbling && p.count(m.from1) >= 1 && p.count(m.from2) >= 1;
}

Distribution apply_move(const Graph& g, const Distribution& p, const Move& m, MoveSystem sys) {
    if (!is_allowed(g, p, m, sys))
        throw ValidationError("move is not allowed under this distribution");
    Distribution q = p;
    if (m.kind == MoveKind::pebbling) {
        q.add(m.from1, -2);
    } else {
        q.add(m.from1, -1);
        q.add(m.from2, -1);
    }
    q.add(m.to, 1);
    return q;
}

Dyadic weight(const Graph& g, const Distribution& p, int u) {
    if (p.vertex_count() != g.vertex_count())
        throw ValidationError("distribution does not match graph");
    Dyadic w;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = p.count(v);
        if (c > 0) w += Dyadic::term(static_cast<std::uint64_t>(c), g.distance(u, v));
    }
    return w;
}

bool weight_at_least_one_raw(const Graph& g, const std::vector<std::uint8_t>& counts, int u,
                             std::vector<std::int64_t>& buckets) {
    // Bucket pebbles by distance from u, then fold from the farthest bucket
    // inward; r ends as floor(W_P(u)), using floor(x/2) = floor(floor(x)/2).
    // W >= 1 iff that floor is >= 1, so the test is exact.
    int maxd = 0;
    int n = g.vertex_count();
    if (static_cast<int>(buckets.size()) < g.diameter() + 1)
        buckets.assign(static_cast<std::size_t>(g.diameter()) + 1, 0);
    for (int d = 0; d <= g.diameter(); ++d) buckets[static_cast<std::size_t>(d)] = 0;
    for (int v = 0; v < n; ++v) {
        if (counts[static_cast<std::size_t>(v)] == 0) continue;
        int d = g.distance(u, v);
        buckets[static_cast<std::size_t>(d)] += counts[static_cast<std::size_t>(v)];
        if (d > maxd) maxd = d;
    }
    std::int64_t r = buckets[static_cast<std::size_t>(maxd)];
    for (int d = maxd - 1; d >= 0; --d) {
        r = buckets[static_cast<std::size_t>(d)] + (r >> 1);
    }
    return r >= 1;
}

bool weight_at_least_one(const Graph& g, const Distribution& p, int u) {
    if (p.vertex_count() != g.vertex_count())
        throw ValidationError("distribution does not match graph");
    std::vector<std::int64_t> buckets;
    return weight_at_least_one_raw(g, p.counts(), u, buckets);
}

} // namespace pebblelab
