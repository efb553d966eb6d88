#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace distcolor {

// Exact arithmetic throughout: the defect and rounding guarantees are exact
// inequalities, so weights and fractional values are arbitrary-precision
// rationals.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline int floor_log2(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("floor_log2(0)");
    int r = 0;
    while (x >>= 1) ++r;
    return r;
}

inline int ceil_log2(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("ceil_log2(0)");
    int f = floor_log2(x);
    return (std::uint64_t{1} << f) == x ? f : f + 1;
}

// Number of bits needed to encode a value in [0, x].
inline long bit_width_of(std::uint64_t x) { return x == 0 ? 1 : floor_log2(x) + 1; }

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::uint64_t next_prime(std::uint64_t p) {
    while (!is_prime(p)) ++p;
    return p;
}

// Iterated base-2 logarithm (number of times log2 must be applied to reach <= 1).
inline int log_star(double x) {
    int r = 0;
    while (x > 1.0) {
        x = std::log2(x);
        ++r;
    }
    return r;
}

// ceil(a/b) for positive rationals expressed as an integer.
inline Int ceil_div(const Int& a, const Int& b) { return (a + b - 1) / b; }

inline Int rat_ceil(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    return num >= 0 ? Int((num + den - 1) / den) : Int(num / den);
}

inline Int rat_floor(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    return num >= 0 ? Int(num / den) : Int((num - den + 1) / den);
}

inline std::string rat_str(const Rat& r) { return r.str(); }

}  // namespace distcolor
