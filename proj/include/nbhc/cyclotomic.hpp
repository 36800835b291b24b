#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nbhc/bigint.hpp"
#include "nbhc/poly.hpp"

namespace nbhc {

// m-th cyclotomic polynomial, computed by exact division of x^m - 1 by the
// cyclotomic polynomials of the proper divisors of m.  Memoized, thread-safe.
const CycPoly& cyclotomic_polynomial(unsigned m);

unsigned totient(unsigned m);

// An element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1),
// i.e. integer coefficient vectors modulo the m-th cyclotomic polynomial.
// The coefficient vector always has length exactly phi(m), so equal elements
// have equal representations.  Values are immutable once constructed.
class CycInt {
  public:
    CycInt() : m_(1), c_{Int(0)} {}

    static CycInt zero(unsigned m);
    static CycInt integer(unsigned m, Int n);
    static CycInt root_of_unity(unsigned m, long long k);
    // Reduce an arbitrary polynomial in zeta_m.
    static CycInt from_poly(unsigned m, const CycPoly& p);

    unsigned modulus() const { return m_; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const CycInt& o) const { return m_ == o.m_ && c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }
    // Lexicographic on (m, coeffs); a stable total order for containers.
    bool operator<(const CycInt& o) const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;

    // Image under zeta_m -> zeta_m^-1 (complex conjugation).
    CycInt conjugate() const;
    bool is_real() const { return *this == conjugate(); }
    // The rational integer value, if all higher power-basis coefficients vanish.
    std::optional<Int> try_integer() const;

    // Lift to a polynomial of degree < phi(m) (for norms, printing, hashing).
    CycPoly to_poly() const;

    // Renders in the same grammar parse_cyclotomic_literal accepts, e.g.
    // "-z^3 - z^2 + 1".
    std::string to_string() const;

  private:
    CycInt(unsigned m, std::vector<Int> c) : m_(m), c_(std::move(c)) {}
    void check_same_modulus(const CycInt& o) const;
    unsigned m_;
    std::vector<Int> c_;
};

// |a| under the embedding zeta_m -> exp(2*pi*i/m).  All criteria are
// Galois-invariant, so the choice of primitive root is a convention.
double complex_abs(const CycInt& a);

// Exact sign of the real embedding of a real element: -1, 0 or +1.
// Decided by interval refinement at increasing precision; the value 0 is
// certified algebraically (a == 0), never numerically.
// Throws std::invalid_argument if a is not real, std::runtime_error if the
// precision ladder is exhausted (does not happen at sane coefficient sizes).
int real_embedding_sign(const CycInt& a);

// Norm from Q(zeta_m) to Q: the product of all Galois conjugates, computed
// exactly as the determinant of the multiplication-by-a matrix on the power
// basis (fraction-free Bareiss elimination).
Int field_norm(const CycInt& a);

struct RootsOfUnityRep {
    unsigned g = 0;
    // Non-decreasing exponent multiset e_1 <= ... <= e_g with
    // sum zeta_m^{e_i} = beta.
    std::vector<unsigned> exponents;
};

// Smallest-cardinality representation of beta != 0 as a sum of g <= g_max
// m-th roots of unity, found by iterative deepening with memoization of
// failed partial states.  Integer beta takes a direct route: the returned
// size is provably minimal when m has at most two distinct prime factors;
// for three or more the deepening search still looks for something smaller
// within the node budget.  Returns nullopt if no representation was found
// within g_max (or the budget ran out before one appeared).
std::optional<RootsOfUnityRep> roots_of_unity_representation(
    const CycInt& beta, unsigned g_max, std::uint64_t node_budget = 2'000'000);

inline unsigned default_g_max(unsigned m) { return 3 * m; }

// Parses gamma literals such as "4", "-1", "z", "-z^3-z^2+1", "2+3*z^2",
// with z denoting zeta_m.  Throws std::invalid_argument on malformed input.
CycInt parse_cyclotomic_literal(const std::string& text, unsigned m);

}  // namespace nbhc
