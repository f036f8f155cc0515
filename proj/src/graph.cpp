#include "graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace pebblelab {

namespace {

constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

void check_budget(long long n, int vertex_budget, const std::string& what) {
    if (vertex_budget < 1)
        throw ValidationError("vertex budget must be positive");
    if (n > vertex_budget)
        throw SizeBudgetError(what + " would have " + std::to_string(n) +
                              " vertices, over the budget of " +
                              std::to_string(vertex_budget));
}

std::vector<std::string> index_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

// Tuple labels compose flat and left-associative: ((a,b),c) renders as (a,b,c).
std::string tuple_inner(const std::string& label) {
    if (label.size() >= 2 && label.front() == '(' && label.back() == ')')
        return label.substr(1, label.size() - 2);
    return label;
}

} // namespace

Graph::Graph(int n,
             std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels,
             std::string name)
    : n_(n), name_(std::move(name)) {
    if (n < 1)
        throw ValidationError("graph must have at least one vertex");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw ValidationError("label list length does not match vertex count");
    labels_ = labels.empty() ? index_labels(n) : std::move(labels);

    adj_.assign(static_cast<std::size_t>(n), {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError("edge endpoint outside vertex range: " +
                                  std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw ValidationError("non-simple: self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw ValidationError("non-simple: duplicate edge " + std::to_string(key.first) +
                                  " " + std::to_string(key.second));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    edge_count_ = static_cast<std::int64_t>(seen.size());
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    // all-pairs BFS; also checks connectivity
    dist_.assign(static_cast<std::size_t>(n) * n, kUnreached);
    ecc_.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int src = 0; src < n; ++src) {
        auto* row = &dist_[static_cast<std::size_t>(src) * n];
        row[src] = 0;
        int head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            int u = queue[head++];
            for (int w : adj_[static_cast<std::size_t>(u)]) {
                if (row[w] == kUnreached) {
                    row[w] = static_cast<std::uint16_t>(row[u] + 1);
                    queue[tail++] = w;
                }
            }
        }
        if (tail != n)
            throw ValidationError("disconnected: vertex " + std::to_string(src) +
                                  " cannot reach every vertex");
        int e = 0;
        for (int v = 0; v < n; ++v) e = std::max(e, static_cast<int>(row[v]));
        ecc_[static_cast<std::size_t>(src)] = e;
    }
    diameter_ = *std::max_element(ecc_.begin(), ecc_.end());
    radius_ = *std::min_element(ecc_.begin(), ecc_.end());
    center_ = static_cast<int>(std::min_element(ecc_.begin(), ecc_.end()) - ecc_.begin());
}

VertexSet Graph::distance_ball(int v, int k) const {
    check_vertex(v);
    if (k < 0)
        throw ValidationError("ball radius must be nonnegative");
    VertexSet s(n_);
    for (int u = 0; u < n_; ++u)
        if (distance(v, u) <= k) s.set(u);
    return s;
}

Graph build_complete(int m, int vertex_budget) {
    if (m < 1)
        throw ValidationError("complete graph needs at least one vertex");
    check_budget(m, vertex_budget, "complete graph");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return Graph(m, std::move(edges), {}, "K" + std::to_string(m));
}

Graph build_path(int n, int vertex_budget) {
    if (n < 1)
        throw ValidationError("path needs at least one vertex");
    check_budget(n, vertex_budget, "path");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges), {}, "P" + std::to_string(n));
}

Graph build_cycle(int n, int vertex_budget) {
    if (n < 3)
        throw ValidationError("cycle needs at least three vertices");
    check_budget(n, vertex_budget, "cycle");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, std::move(edges), {}, "C" + std::to_string(n));
}

Graph cartesian_product(const Graph& g, const Graph& h, int vertex_budget) {
    long long n = static_cast<long long>(g.vertex_count()) * h.vertex_count();
    check_budget(n, vertex_budget, "cartesian product");
    int hn = h.vertex_count();
    auto index = [hn](int a, int b) { return a * hn + b; };

    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int a = 0; a < g.vertex_count(); ++a) {
        for (int b = 0; b < hn; ++b) {
            labels[static_cast<std::size_t>(index(a, b))] =
                "(" + tuple_inner(g.label(a)) + "," + tuple_inner(h.label(b)) + ")";
            for (int b2 : h.neighbors(b))
                if (b2 > b) edges.emplace_back(index(a, b), index(a, b2));
            for (int a2 : g.neighbors(a))
                if (a2 > a) edges.emplace_back(index(a, b), index(a2, b));
        }
    }
    std::string name = g.name().empty() || h.name().empty()
                           ? std::string{}
                           : "product(" + g.name() + "," + h.name() + ")";
    Graph p(static_cast<int>(n), std::move(edges), std::move(labels), std::move(name));
    p.left_factor_ = std::make_shared<const Graph>(g);
    p.right_factor_ = std::make_shared<const Graph>(h);
    return p;
}

Graph build_hamming(int m, int k, int vertex_budget) {
    if (m < 1 || k < 1)
        throw ValidationError("hamming graph needs alphabet size >= 1 and word length >= 1");
    long long n = 1;
    for (int i = 0; i < k; ++i) {
        n *= m;
        if (n > vertex_budget)
            throw SizeBudgetError("hamming graph would have " + std::to_string(m) + "^" +
                                  std::to_string(k) + " vertices, over the budget of " +
                                  std::to_string(vertex_budget));
    }

    // vertex index encodes the word in base m, first letter most significant
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> codes(static_cast<std::size_t>(k));
        int rest = v;
        for (int pos = k - 1; pos >= 0; --pos) {
            codes[static_cast<std::size_t>(pos)] = rest % m;
            rest /= m;
        }
        std::string word;
        for (int pos = 0; pos < k; ++pos) {
            if (m <= 26)
                word += static_cast<char>('a' + codes[static_cast<std::size_t>(pos)]);
            else
                word += (pos ? "." : "") + std::to_string(codes[static_cast<std::size_t>(pos)]);
        }
        labels[static_cast<std::size_t>(v)] = word;
    }

    std::vector<std::pair<int, int>> edges;
    int place = 1;
    for (int pos = 0; pos < k; ++pos) {
        for (int v = 0; v < n; ++v) {
            int digit = (v / place) % m;
            for (int d2 = digit + 1; d2 < m; ++d2)
                edges.emplace_back(v, v + (d2 - digit) * place);
        }
        place *= m;
    }
    return Graph(static_cast<int>(n), std::move(edges), std::move(labels),
                 "hamming(" + std::to_string(m) + "," + std::to_string(k) + ")");
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.universe_size() != g.vertex_count())
        throw ValidationError("vertex set does not match graph");
    VertexSet out = s;
    s.for_each([&](int v) {
        for (int w : g.neighbors(v)) out.set(w);
    });
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = closed_neighborhood(g, s);
    out.subtract(s);
    return out;
}

} // namespace pebblelab
