#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace pebblelab {

// Subset of {0..n-1} as a packed bitset. n is fixed at construction;
// set operations require both operands to share the same universe.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), words_(word_count(universe), 0) {
        if (universe < 0)
            throw ValidationError("vertex set universe must be nonnegative");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int v) const {
        check_index(v);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check_index(v);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check_index(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_full() const { return count() == n_; }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // Removes o's members from this set.
    VertexSet& subtract(const VertexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool contains(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + bit);
                w &= w - 1;
            }
        }
    }

private:
    static std::size_t word_count(int n) {
        return (static_cast<std::size_t>(n) + 63) / 64;
    }

    void check_index(int v) const {
        if (v < 0 || v >= n_)
            throw ValidationError("vertex index " + std::to_string(v) +
                                  " outside universe of size " + std::to_string(n_));
    }

    void check_universe(const VertexSet& o) const {
        if (o.n_ != n_)
            throw ValidationError("vertex sets over different universes");
    }

    void trim() {
        int tail = n_ & 63;
        if (tail != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace pebblelab
