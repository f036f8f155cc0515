#include "reachability.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace pebblelab {

namespace {

// Mutable search state: raw counts plus the move path taken so far.
struct SearchState {
    std::vector<std::uint8_t> counts;
    std::vector<Move> path;

    void apply(const Move& m) {
        if (m.kind == MoveKind::pebbling) {
            counts[static_cast<std::size_t>(m.from1)] -= 2;
        } else {
            counts[static_cast<std::size_t>(m.from1)] -= 1;
            counts[static_cast<std::size_t>(m.from2)] -= 1;
        }
        counts[static_cast<std::size_t>(m.to)] += 1;
        path.push_back(m);
    }

    void undo(const Move& m) {
        path.pop_back();
        counts[static_cast<std::size_t>(m.to)] -= 1;
        if (m.kind == MoveKind::pebbling) {
            counts[static_cast<std::size_t>(m.from1)] += 2;
        } else {
            counts[static_cast<std::size_t>(m.from1)] += 1;
            counts[static_cast<std::size_t>(m.from2)] += 1;
        }
    }

    std::string key() const {
        return std::string(reinterpret_cast<const char*>(counts.data()), counts.size());
    }
};

class Dfs {
public:
    Dfs(const Graph& g, int target, MoveSystem sys, std::vector<std::int64_t>& scratch)
        : g_(g), target_(target), sys_(sys), scratch_(scratch) {}

    // Pre: state has no pebble on target and target weight >= 1.
    bool run(SearchState& state) {
        visited_.insert(state.key());
        return expand(state);
    }

private:
    // Deterministic move order: pebbling moves first (ascending source, then
    // ascending target), then strict rubbling moves (ascending source pair,
    // then ascending target). A move that lands on the target ends the search.
    bool expand(SearchState& state) {
        int n = g_.vertex_count();
        for (int from = 0; from < n; ++from) {
            if (state.counts[static_cast<std::size_t>(from)] < 2) continue;
            for (int to : g_.neighbors(from)) {
                if (try_move(state, Move::pebbling(from, to))) return true;
            }
        }
        if (sys_ == MoveSystem::rubbling) {
            for (int a = 0; a < n; ++a) {
                if (state.counts[static_cast<std::size_t>(a)] < 1) continue;
                for (int b = a + 1; b < n; ++b) {
                    if (state.counts[static_cast<std::size_t>(b)] < 1) continue;
                    for (int to : g_.neighbors(a)) {
                        if (!g_.adjacent(b, to)) continue;
                        if (try_move(state, Move::strict_rubbling(a, b, to))) return true;
                    }
                }
            }
        }
        return false;
    }

    bool try_move(SearchState& state, const Move& m) {
        if (m.to == target_) {
            state.path.push_back(m);
            return true;
        }
        state.apply(m);
        bool found = false;
        if (weight_at_least_one_raw(g_, state.counts, target_, scratch_) &&
            visited_.insert(state.key()).second) {
            found = expand(state);
        }
        if (!found) state.undo(m);
        return found;
    }

    const Graph& g_;
    int target_;
    MoveSystem sys_;
    std::vector<std::int64_t>& scratch_;
    std::unordered_set<std::string> visited_;
};

} // namespace

ReachSolver::ReachSolver(const Graph& g) : g_(g) {
    weight_scratch_.assign(static_cast<std::size_t>(g.diameter()) + 1, 0);
}

ReachResult ReachSolver::reachable(const Distribution& p, int target, MoveSystem sys) {
    if (p.vertex_count() != g_.vertex_count())
        throw ValidationError("distribution does not match graph");
    if (target < 0 || target >= g_.vertex_count())
        throw ValidationError("target vertex out of range");
    ++queries_;

    ReachResult result;
    if (p.count(target) >= 1) {
        result.reachable = true;
        return result;
    }
    if (!weight_at_least_one_raw(g_, p.counts(), target, weight_scratch_)) {
        result.reason = UnreachableReason::weight_pruned;
        return result;
    }
    SearchState state{p.counts(), {}};
    Dfs dfs(g_, target, sys, weight_scratch_);
    if (dfs.run(state)) {
        result.reachable = true;
        result.witness = std::move(state.path);
    } else {
        result.reason = UnreachableReason::search_exhausted;
    }
    return result;
}

SolvableReport ReachSolver::solvable(const Distribution& p, MoveSystem sys) {
    if (p.vertex_count() != g_.vertex_count())
        throw ValidationError("distribution does not match graph");
    int n = g_.vertex_count();
    SolvableReport report;
    report.per_vertex.assign(static_cast<std::size_t>(n), std::nullopt);

    // Test targets in descending distance from the weight-richest support
    // vertex, so hopeless distributions fail on the first few queries.
    int anchor = 0;
    Dyadic best;
    bool have_anchor = false;
    for (int v = 0; v < n; ++v) {
        if (p.count(v) == 0) continue;
        Dyadic w = weight(g_, p, v);
        if (!have_anchor || best < w) {
            best = w;
            anchor = v;
            have_anchor = true;
        }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    if (have_anchor) {
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g_.distance(anchor, a) > g_.distance(anchor, b);
        });
    }

    report.solvable = true;
    for (int v : order) {
        ReachResult r = reachable(p, v, sys);
        bool ok = r.reachable;
        report.per_vertex[static_cast<std::size_t>(v)] = std::move(r);
        if (!ok) {
            report.solvable = false;
            report.failing_vertex = v;
            break;
        }
    }
    return report;
}

ReachResult reachable(const Graph& g, const Distribution& p, int target, MoveSystem sys) {
    ReachSolver solver(g);
    return solver.reachable(p, target, sys);
}

SolvableReport solvable(const Graph& g, const Distribution& p, MoveSystem sys) {
    ReachSolver solver(g);
    return solver.solvable(p, sys);
}

bool replay_witness(const Graph& g, const Distribution& p, std::span<const Move> witness,
                    int target, MoveSystem sys) {
    Distribution cur = p;
    for (const Move& m : witness) {
        if (!is_allowed(g, cur, m, sys)) return false;
        cur = apply_move(g, cur, m, sys);
    }
    return cur.count(target) >= 1;
}

} // namespace pebblelab
