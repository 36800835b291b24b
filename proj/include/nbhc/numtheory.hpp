#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nbhc/bigint.hpp"

namespace nbhc {

// Sign and prime->exponent map.  Keeps numbers like (v-gamma)^(v-1) in
// factored form so divisibility logic never expands them.
class FactoredInt {
  public:
    FactoredInt() = default;  // zero

    static FactoredInt zero() { return FactoredInt(); }
    static FactoredInt one();
    static FactoredInt from_int(const Int& n);  // factors n; n may be 0

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    const std::map<Int, unsigned long>& factors() const { return factors_; }
    // All prime factors below 2^64 were certified by deterministic
    // Miller-Rabin; larger ones only by BPSW.
    bool primality_certified() const { return certified_; }

    FactoredInt operator*(const FactoredInt& o) const;
    FactoredInt pow(unsigned long e) const;

    Int value() const;
    unsigned long exponent_of(const Int& p) const;
    // Product of the primes appearing to odd exponent.
    Int square_free_part() const;

    std::string to_string() const;  // e.g. "-2^3*5"

  private:
    int sign_ = 0;
    bool certified_ = true;
    std::map<Int, unsigned long> factors_;
};

// Deterministic for |n| < 2^64 (Miller-Rabin with a proven witness set),
// BPSW above that.
bool is_prime(const Int& n);

// Complete factorization by trial division then Pollard-Brent rho.
// Throws std::invalid_argument on n == 0... use FactoredInt::from_int for 0.
FactoredInt factorize(const Int& n);

// Product of primes with odd exponent; requires w > 0.
Int square_free_part(const FactoredInt& w);

unsigned long euler_phi(unsigned long m);

// Least f >= 1 with a^f = 1 (mod n); requires gcd(a, n) = 1, n >= 2.
unsigned long multiplicative_order(const Int& a, unsigned long n);

// p self-conjugate mod m: ord_m(p) even, say 2s, with p^s = -1 (mod m).
// For m in {1, 2} this is defined true: over those rings a*conj(a) = w forces
// w to be a rational square, which is what the criterion needs there.
// Requires gcd(p, m) = 1.
bool is_self_conjugate(const Int& p, unsigned long m);

// Whether n = sum p_i * t_i with nonnegative integers t_i over the given
// (nonempty) prime set; dynamic program over [0, n].
bool semigroup_representable(unsigned long n, const std::set<unsigned long>& primes);

std::set<unsigned long> prime_divisors(unsigned long m);

}  // namespace nbhc
