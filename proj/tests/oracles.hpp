#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive — no memoization, no pruning, no shared code with the
// production search paths they check.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "distribution.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"

namespace oracle {

using pebblelab::Distribution;
using pebblelab::Graph;
using pebblelab::Move;
using pebblelab::MoveSystem;
using pebblelab::VertexSet;

// Single-source BFS over an explicit adjacency list, independent of
// Graph's internal distance table.
inline std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = g.neighbors(v);
        adj[static_cast<std::size_t>(v)].assign(nbrs.begin(), nbrs.end());
    }
    return adj;
}

// Full enumeration of every executable move sequence. Exponential; callers
// keep |P| <= 5 and graphs tiny.
inline bool naive_reachable(const Graph& g, const Distribution& p, int target, MoveSystem sys) {
    if (p.count(target) >= 1) return true;
    int n = g.vertex_count();
    for (int from = 0; from < n; ++from) {
        if (p.count(from) < 2) continue;
        for (int to : g.neighbors(from)) {
            Distribution q = p;
            q.add(from, -2);
            q.add(to, 1);
            if (naive_reachable(g, q, target, sys)) return true;
        }
    }
    if (sys == MoveSystem::rubbling) {
        for (int a = 0; a < n; ++a) {
            if (p.count(a) < 1) continue;
            for (int b = a + 1; b < n; ++b) {
                if (p.count(b) < 1) continue;
                for (int to : g.neighbors(a)) {
                    if (!g.adjacent(b, to)) continue;
                    Distribution q = p;
                    q.add(a, -1);
                    q.add(b, -1);
                    q.add(to, 1);
                    if (naive_reachable(g, q, target, sys)) return true;
                }
            }
        }
    }
    return false;
}

inline bool naive_solvable(const Graph& g, const Distribution& p, MoveSystem sys) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!naive_reachable(g, p, v, sys)) return false;
    return true;
}

// Visits every size-`size` subset of {0..n-1} in lexicographic order.
template <typename F>
inline bool for_each_subset(int n, int size, F&& f) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    if (size > n) return false;
    while (true) {
        if (f(pick)) return true;
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) return false;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline bool subset_dominates(const Graph& g, const std::vector<int>& pick, int k) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool covered = false;
        for (int s : pick) {
            if (g.distance(v, s) <= k) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

// Exact gamma_k by all-subsets enumeration; also yields the lexicographically
// smallest optimal set. Keep n <= 12 or so.
inline int naive_gamma(const Graph& g, int k, std::vector<int>* witness = nullptr) {
    for (int size = 1; size <= g.vertex_count(); ++size) {
        bool found = for_each_subset(g.vertex_count(), size, [&](const std::vector<int>& pick) {
            if (!subset_dominates(g, pick, k)) return false;
            if (witness) *witness = pick;
            return true;
        });
        if (found) return size;
    }
    return g.vertex_count();
}

// Every multiset of `size` pebbles over n vertices, as count vectors.
template <typename F>
inline void for_each_composition(int n, int size, F&& f) {
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    auto descend = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            counts[static_cast<std::size_t>(pos)] = left;
            f(counts);
            return;
        }
        for (int c = left; c >= 0; --c) {
            counts[static_cast<std::size_t>(pos)] = c;
            self(self, pos + 1, left - c);
        }
    };
    descend(descend, 0, size);
}

// Exact optimal number by ascending unfiltered enumeration; `solv` decides
// solvability (pass the production solver or naive_solvable).
template <typename Solv>
inline int brute_optimal(const Graph& g, MoveSystem sys, Solv&& solv) {
    for (int size = 1;; ++size) {
        int best = -1;
        for_each_composition(g.vertex_count(), size, [&](const std::vector<int>& counts) {
            if (best >= 0) return;
            Distribution d(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) d.set_count(v, counts[static_cast<std::size_t>(v)]);
            if (solv(g, d, sys)) best = size;
        });
        if (best >= 0) return best;
    }
}

// Random connected graph: random spanning tree plus extra random edges.
inline Graph random_connected_graph(std::mt19937& rng, int n, double extra_edge_prob = 0.3) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool tree_edge = false;
            for (auto [a, b] : edges)
                if ((a == u && b == v) || (a == v && b == u)) tree_edge = true;
            if (!tree_edge && coin(rng) < extra_edge_prob) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

inline Distribution random_distribution(std::mt19937& rng, int n, int total) {
    Distribution d(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < total; ++i) d.add(pick(rng), 1);
    return d;
}

} // namespace oracle
