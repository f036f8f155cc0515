#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "distribution.hpp"
#include "graph.hpp"

namespace pebblelab {

enum class UnreachableReason {
    weight_pruned,    // W_P(target) < 1, so no move sequence can succeed
    search_exhausted, // every executable sequence was covered
};

struct ReachResult {
    bool reachable = false;
    std::vector<Move> witness;                                       // when reachable
    UnreachableReason reason = UnreachableReason::search_exhausted;  // when not
};

struct SolvableReport {
    bool solvable = false;
    int failing_vertex = -1; // first vertex found unreachable, -1 if none
    // Indexed by vertex; empty optionals are vertices never tested because an
    // earlier vertex already failed.
    std::vector<std::optional<ReachResult>> per_vertex;
};

// Decides reachability exactly: depth-first search over distributions with a
// per-query memo of visited states. Sound and complete because every move
// removes one pebble, so the state graph is a DAG of depth < |P|. States
// whose target weight drops below one are abandoned (weight never increases
// under any move). Holds reusable scratch; queries are independent.
class ReachSolver {
public:
    explicit ReachSolver(const Graph& g);

    ReachResult reachable(const Distribution& p, int target, MoveSystem sys);
    SolvableReport solvable(const Distribution& p, MoveSystem sys);

    // Total reachability queries answered so far (the search budget unit).
    std::uint64_t queries_used() const { return queries_; }

private:
    const Graph& g_;
    std::vector<std::int64_t> weight_scratch_;
    std::uint64_t queries_ = 0;
};

ReachResult reachable(const Graph& g, const Distribution& p, int target, MoveSystem sys);
SolvableReport solvable(const Graph& g, const Distribution& p, MoveSystem sys);

// Replays a witness from p via is_allowed/apply_move; true iff every move is
// allowed in sequence and the final distribution has a pebble on target.
bool replay_witness(const Graph& g, const Distribution& p, std::span<const Move> witness,
                    int target, MoveSystem sys);

} // namespace pebblelab
