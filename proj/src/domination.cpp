#include "domination.hpp"

#include <algorithm>
#include <vector>

namespace pebblelab {

bool is_distance_k_dominating(const Graph& g, const VertexSet& s, int k) {
    if (s.universe_size() != g.vertex_count())
        throw ValidationError("vertex set does not match graph");
    if (k < 0)
        throw ValidationError("domination distance must be nonnegative");
    auto members = s.members();
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool covered = false;
        for (int m : members) {
            if (g.distance(v, m) <= k) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

namespace {

// Set-cover view of distance-k domination: choosing vertex v covers its
// distance-<=k ball. Candidates are branched in a fixed order; the bound
// prunes once the remaining picks cannot cover the uncovered count.
class CoverSearch {
public:
    CoverSearch(const Graph& g, const std::vector<VertexSet>& balls)
        : g_(g), balls_(balls) {
        max_ball_ = 0;
        for (const auto& b : balls) max_ball_ = std::max(max_ball_, b.count());
    }

    // Does a cover of exactly `size` picks from `order` exist? Fills *out with
    // the first one found in branch order when it does.
    bool exists(int size, const std::vector<int>& order, VertexSet* out) {
        order_ = &order;
        out_ = out;
        chosen_.clear();
        VertexSet covered(g_.vertex_count());
        return descend(0, size, covered);
    }

private:
    bool descend(std::size_t start, int picks_left, const VertexSet& covered) {
        int uncovered = g_.vertex_count() - covered.count();
        if (uncovered == 0) {
            if (out_) {
                VertexSet s(g_.vertex_count());
                for (int v : chosen_) s.set(v);
                *out_ = s;
            }
            return true;
        }
        if (picks_left == 0) return false;
        if (static_cast<long long>(picks_left) * max_ball_ < uncovered) return false;

        // the lowest uncovered vertex must be covered by something still
        // available, otherwise this branch is dead
        int need = -1;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (!covered.test(v)) {
                need = v;
                break;
            }
        }
        bool coverable = false;
        for (std::size_t i = start; i < order_->size(); ++i) {
            if (balls_[static_cast<std::size_t>((*order_)[i])].test(need)) {
                coverable = true;
                break;
            }
        }
        if (!coverable) return false;

        for (std::size_t i = start; i < order_->size(); ++i) {
            int v = (*order_)[i];
            const VertexSet& ball = balls_[static_cast<std::size_t>(v)];
            VertexSet next = covered | ball;
            if (next == covered) continue; // adds nothing
            chosen_.push_back(v);
            if (descend(i + 1, picks_left - 1, next)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    const std::vector<VertexSet>& balls_;
    int max_ball_ = 0;
    const std::vector<int>* order_ = nullptr;
    VertexSet* out_ = nullptr;
    std::vector<int> chosen_;
};

} // namespace

DominationCertificate gamma(const Graph& g, int k) {
    if (k < 0)
        throw ValidationError("domination distance must be nonnegative");
    int n = g.vertex_count();

    DominationCertificate cert;
    cert.k = k;
    cert.proved_optimal = true;

    if (k >= g.diameter()) {
        cert.gamma = 1;
        cert.set = VertexSet(n);
        cert.set.set(0);
        return cert;
    }

    std::vector<VertexSet> balls;
    balls.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) balls.push_back(g.distance_ball(v, k));

    // value search: biggest balls first for early coverage
    std::vector<int> by_ball_size(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) by_ball_size[static_cast<std::size_t>(v)] = v;
    std::stable_sort(by_ball_size.begin(), by_ball_size.end(), [&](int a, int b) {
        return balls[static_cast<std::size_t>(a)].count() > balls[static_cast<std::size_t>(b)].count();
    });

    // witness search: index order, so the first cover found is the
    // lexicographically smallest optimal set
    std::vector<int> by_index(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) by_index[static_cast<std::size_t>(v)] = v;

    CoverSearch search(g, balls);
    for (int size = 1; size <= n; ++size) {
        if (!search.exists(size, by_ball_size, nullptr)) continue;
        VertexSet witness(n);
        bool found = search.exists(size, by_index, &witness);
        (void)found; // same size is feasible, so the lex search must succeed
        cert.gamma = size;
        cert.set = witness;
        return cert;
    }
    throw ValidationError("internal: full vertex set failed to dominate");
}

} // namespace pebblelab
