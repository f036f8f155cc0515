#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pebblelab {

// Exact nonnegative dyadic rational: mantissa / 2^log2_den with an
// arbitrary-precision mantissa. Addition and comparison only; that is all
// the weight function needs, and it keeps the W >= 1 test free of any
// floating-point boundary hazard.
class Dyadic {
public:
    Dyadic() = default; // zero

    static Dyadic from_integer(std::uint64_t value);

    // count * 2^-log2_den
    static Dyadic term(std::uint64_t count, int log2_den);

    Dyadic& operator+=(const Dyadic& o);
    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }

    // -1, 0, 1
    int compare(const Dyadic& o) const;

    bool operator==(const Dyadic& o) const { return compare(o) == 0; }
    bool operator<(const Dyadic& o) const { return compare(o) < 0; }
    bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }

    bool is_zero() const { return mant_.empty(); }
    bool at_least_one() const;

    // Normalized representation: mantissa odd (or zero) and log2_den minimal.
    int log2_den() const { return den_; }
    bool mantissa_fits_u64() const { return mant_.size() <= 1; }
    std::uint64_t mantissa_u64() const { return mant_.empty() ? 0 : mant_[0]; }
    std::string mantissa_decimal() const;

    std::string to_string() const; // "m/2^d" or "m" when d == 0

private:
    // little-endian 64-bit limbs; empty means zero
    std::vector<std::uint64_t> mant_;
    int den_ = 0;

    void normalize();
    static std::vector<std::uint64_t> shift_left(const std::vector<std::uint64_t>& v, int bits);
    static void add_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static int compare_vec(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static int bit_length(const std::vector<std::uint64_t>& v);
};

} // namespace pebblelab
