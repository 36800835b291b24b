#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nbhc {

// Arbitrary-precision integer used throughout. All certificate-relevant
// arithmetic is exact; doubles appear only in embeddings and pruning bounds.
using Int = boost::multiprecision::cpp_int;

inline Int int_pow(Int base, std::uint64_t e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// Largest s with s*s <= n.  n must be >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int s = isqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

inline Int pow_mod(Int base, Int exp, const Int& mod) {
    if (mod <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    Int r = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if ((exp & 1) != 0) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

}  // namespace nbhc
