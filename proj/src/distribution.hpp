#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dyadic.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"

namespace pebblelab {

// Per-vertex counts are bytes and the initial total is capped at 255, so no
// intermediate state of any move sequence can overflow a count (moves never
// increase the total).
inline constexpr int kMaxTotalPebbles = 255;

// Pebble counts on the vertices of one graph. The total is cached.
class Distribution {
public:
    explicit Distribution(int vertex_count)
        : counts_(static_cast<std::size_t>(vertex_count), 0) {
        if (vertex_count < 1)
            throw ValidationError("distribution needs at least one vertex");
    }

    static Distribution single(int vertex_count, int vertex, int pebbles) {
        Distribution d(vertex_count);
        d.set_count(vertex, pebbles);
        return d;
    }

    int vertex_count() const { return static_cast<int>(counts_.size()); }

    int count(int v) const {
        check_vertex(v);
        return counts_[static_cast<std::size_t>(v)];
    }

    void set_count(int v, int pebbles) {
        check_vertex(v);
        if (pebbles < 0)
            throw ValidationError("pebble count must be nonnegative");
        int next_total = total_ - counts_[static_cast<std::size_t>(v)] + pebbles;
        if (pebbles > kMaxTotalPebbles || next_total > kMaxTotalPebbles)
            throw SizeBudgetError("distribution size may not exceed " +
                                  std::to_string(kMaxTotalPebbles) + " pebbles");
        total_ = next_total;
        counts_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(pebbles);
    }

    void add(int v, int delta) { set_count(v, count(v) + delta); }

    int total() const { return total_; }

    VertexSet support() const {
        VertexSet s(vertex_count());
        for (int v = 0; v < vertex_count(); ++v)
            if (counts_[static_cast<std::size_t>(v)] > 0) s.set(v);
        return s;
    }

    Distribution restricted(const VertexSet& s) const {
        if (s.universe_size() != vertex_count())
            throw ValidationError("vertex set does not match distribution");
        Distribution out(vertex_count());
        s.for_each([&](int v) { out.set_count(v, count(v)); });
        return out;
    }

    const std::vector<std::uint8_t>& counts() const { return counts_; }

    // raw bytes, usable as a hash key for state memoization
    std::string_view key() const {
        return {reinterpret_cast<const char*>(counts_.data()), counts_.size()};
    }

    bool operator==(const Distribution& o) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw ValidationError("vertex index " + std::to_string(v) +
                                  " outside distribution of size " +
                                  std::to_string(vertex_count()));
    }

    std::vector<std::uint8_t> counts_;
    int total_ = 0;
};

enum class MoveSystem {
    pebbling_only,
    rubbling, // admits every pebbling move plus strict rubbling moves
};

enum class MoveKind : std::uint8_t {
    pebbling,        // take 2 from `from1`, put 1 on `to`
    strict_rubbling, // take 1 from each of `from1`, `from2`, put 1 on `to`
};

struct Move {
    MoveKind kind;
    int from1;
    int from2; // -1 for pebbling moves
    int to;

    static Move pebbling(int from, int to) { return {MoveKind::pebbling, from, -1, to}; }
    static Move strict_rubbling(int a, int b, int to) {
        return {MoveKind::strict_rubbling, a, b, to};
    }

    bool operator==(const Move& o) const = default;
};

// Structural validity: endpoints adjacent where required, distinct sources.
// Independent of any distribution.
bool is_valid_move(const Graph& g, const Move& m);
void require_valid_move(const Graph& g, const Move& m);

// Whether the (structurally valid) move may be played from p under sys.
// Structurally invalid moves raise ValidationError, distinct from `false`.
bool is_allowed(const Graph& g, const Distribution& p, const Move& m, MoveSystem sys);

// Applies an allowed move, returning the successor distribution.
Distribution apply_move(const Graph& g, const Distribution& p, const Move& m, MoveSystem sys);

// W_P(u) = sum_v P(v) * 2^-d(u,v), exactly.
Dyadic weight(const Graph& g, const Distribution& p, int u);

// Exact W_P(u) >= 1 test in integer arithmetic, no big numbers involved.
bool weight_at_least_one(const Graph& g, const Distribution& p, int u);

// Same test against a raw count vector; `buckets` is caller-provided scratch
// of length >= diameter + 1 (contents ignored, overwritten).
bool weight_at_least_one_raw(const Graph& g, const std::vector<std::uint8_t>& counts, int u,
                             std::vector<std::int64_t>& buckets);

} // namespace pebblelab
