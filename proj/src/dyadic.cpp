#include "dyadic.hpp"

#include <algorithm>
#include <bit>

#include "errors.hpp"

namespace pebblelab {

Dyadic Dyadic::from_integer(std::uint64_t value) {
    Dyadic d;
    if (value != 0) d.mant_.push_back(value);
    return d;
}

Dyadic Dyadic::term(std::uint64_t count, int log2_den) {
    if (log2_den < 0)
        throw ValidationError("dyadic denominator exponent must be nonnegative");
    Dyadic d;
    if (count != 0) {
        d.mant_.push_back(count);
        d.den_ = log2_den;
        d.normalize();
    }
    return d;
}

std::vector<std::uint64_t> Dyadic::shift_left(const std::vector<std::uint64_t>& v, int bits) {
    if (v.empty() || bits == 0) return v;
    int word_shift = bits / 64;
    int bit_shift = bits % 64;
    std::vector<std::uint64_t> out(v.size() + static_cast<std::size_t>(word_shift) + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t j = i + static_cast<std::size_t>(word_shift);
        out[j] |= v[i] << bit_shift;
        if (bit_shift != 0) out[j + 1] |= v[i] >> (64 - bit_shift);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

void Dyadic::add_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    unsigned carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t rhs = i < b.size() ? b[i] : 0;
        std::uint64_t sum = a[i] + rhs;
        unsigned c1 = sum < a[i] ? 1u : 0u;
        std::uint64_t sum2 = sum + carry;
        unsigned c2 = sum2 < sum ? 1u : 0u;
        a[i] = sum2;
        carry = c1 | c2;
    }
    if (carry) a.push_back(1);
}

int Dyadic::compare_vec(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int Dyadic::bit_length(const std::vector<std::uint64_t>& v) {
    if (v.empty()) return 0;
    return static_cast<int>((v.size() - 1) * 64) + (64 - std::countl_zero(v.back()));
}

void Dyadic::normalize() {
    while (!mant_.empty() && mant_.back() == 0) mant_.pop_back();
    if (mant_.empty()) {
        den_ = 0;
        return;
    }
    // strip common factors of two, limited by the denominator exponent
    int tz = 0;
    for (std::size_t i = 0; i < mant_.size(); ++i) {
        if (mant_[i] == 0) {
            tz += 64;
        } else {
            tz += std::countr_zero(mant_[i]);
            break;
        }
    }
    int shift = std::min(tz, den_);
    if (shift == 0) return;
    int word_shift = shift / 64;
    int bit_shift = shift % 64;
    if (word_shift > 0)
        mant_.erase(mant_.begin(), mant_.begin() + word_shift);
    if (bit_shift > 0) {
        for (std::size_t i = 0; i < mant_.size(); ++i) {
            mant_[i] >>= bit_shift;
            if (i + 1 < mant_.size())
                mant_[i] |= mant_[i + 1] << (64 - bit_shift);
        }
    }
    while (!mant_.empty() && mant_.back() == 0) mant_.pop_back();
    den_ -= shift;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    int den = std::max(den_, o.den_);
    std::vector<std::uint64_t> lhs = shift_left(mant_, den - den_);
    std::vector<std::uint64_t> rhs = shift_left(o.mant_, den - o.den_);
    add_into(lhs, rhs);
    mant_ = std::move(lhs);
    den_ = den;
    normalize();
    return *this;
}

int Dyadic::compare(const Dyadic& o) const {
    int den = std::max(den_, o.den_);
    std::vector<std::uint64_t> lhs = shift_left(mant_, den - den_);
    std::vector<std::uint64_t> rhs = shift_left(o.mant_, den - o.den_);
    return compare_vec(lhs, rhs);
}

bool Dyadic::at_least_one() const {
    // value >= 1  <=>  mantissa >= 2^den
    return bit_length(mant_) >= den_ + 1;
}

std::string Dyadic::mantissa_decimal() const {
    if (mant_.empty()) return "0";
    std::vector<std::uint64_t> v = mant_;
    std::string digits;
    while (!v.empty()) {
        // divide v by 10, collect remainder
        unsigned __int128 rem = 0;
        for (std::size_t i = v.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | v[i];
            v[i] = static_cast<std::uint64_t>(cur / 10);
            rem = cur % 10;
        }
        digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string Dyadic::to_string() const {
    if (den_ == 0) return mantissa_decimal();
    return mantissa_decimal() + "/2^" + std::to_string(den_);
}

} // namespace pebblelab
