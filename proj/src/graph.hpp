#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace pebblelab {

// Generators refuse to build graphs larger than this unless the caller
// raises the budget explicitly. Exceeding it is an error, never a truncation.
inline constexpr int kDefaultVertexBudget = 4096;

// Immutable simple connected graph with dense 0-based vertex indices and a
// precomputed all-pairs distance table. Labels are display-only metadata.
// Construction validates simplicity and connectivity; everything downstream
// may rely on both.
class Graph {
public:
    Graph(int n,
          std::vector<std::pair<int, int>> edges,
          std::vector<std::string> labels = {},
          std::string name = {});

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return u != v && distance(u, v) == 1; }

    int distance(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return dist_[static_cast<std::size_t>(u) * n_ + v];
    }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return {adj_[static_cast<std::size_t>(v)].data(), adj_[static_cast<std::size_t>(v)].size()};
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int eccentricity(int v) const {
        check_vertex(v);
        return ecc_[static_cast<std::size_t>(v)];
    }

    int diameter() const { return diameter_; }
    int radius() const { return radius_; }
    // lowest-index vertex of minimum eccentricity
    int center_vertex() const { return center_; }

    const std::string& label(int v) const {
        check_vertex(v);
        return labels_[static_cast<std::size_t>(v)];
    }

    const std::string& name() const { return name_; }

    // Cartesian-product provenance; null for graphs built any other way.
    const Graph* left_factor() const { return left_factor_.get(); }
    const Graph* right_factor() const { return right_factor_.get(); }

    VertexSet empty_set() const { return VertexSet(n_); }
    VertexSet full_set() const { return VertexSet::full(n_); }

    // {u : dist(u, v) <= k}
    VertexSet distance_ball(int v, int k) const;

private:
    friend Graph cartesian_product(const Graph&, const Graph&, int);

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw ValidationError("vertex index " + std::to_string(v) +
                                  " outside graph of order " + std::to_string(n_));
    }

    int n_ = 0;
    std::int64_t edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint16_t> dist_; // row-major n*n
    std::vector<int> ecc_;
    std::vector<std::string> labels_;
    std::string name_;
    int diameter_ = 0;
    int radius_ = 0;
    int center_ = 0;
    std::shared_ptr<const Graph> left_factor_;
    std::shared_ptr<const Graph> right_factor_;
};

Graph build_complete(int m, int vertex_budget = kDefaultVertexBudget);
Graph build_path(int n, int vertex_budget = kDefaultVertexBudget);
Graph build_cycle(int n, int vertex_budget = kDefaultVertexBudget);

// Vertex (a, b) of the product gets index a * h.vertex_count() + b.
// (a,b) ~ (a',b') iff (a = a' and b ~ b') or (b = b' and a ~ a').
Graph cartesian_product(const Graph& g, const Graph& h, int vertex_budget = kDefaultVertexBudget);

// Words of length k over an m-letter alphabet; adjacent iff the words differ
// in exactly one position.
Graph build_hamming(int m, int k, int vertex_budget = kDefaultVertexBudget);

// N[S] = S together with every vertex adjacent to S; N(S) = N[S] \ S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

} // namespace pebblelab
