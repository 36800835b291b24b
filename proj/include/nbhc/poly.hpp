#pragma once

#include <string>
#include <vector>

#include "nbhc/bigint.hpp"

namespace nbhc {

// Dense univariate polynomial over Z, coefficient of x^i at index i.
// Canonical form: no trailing zero coefficients (zero polynomial = empty).
class CycPoly {
  public:
    CycPoly() = default;
    explicit CycPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static CycPoly zero() { return CycPoly(); }
    static CycPoly constant(Int a);
    // x^k
    static CycPoly monomial(std::size_t k, Int a = 1);
    // x^n - 1
    static CycPoly x_pow_minus_one(std::size_t n);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const;

    bool operator==(const CycPoly& o) const { return c_ == o.c_; }
    bool operator!=(const CycPoly& o) const { return !(*this == o); }

    CycPoly operator+(const CycPoly& o) const;
    CycPoly operator-(const CycPoly& o) const;
    CycPoly operator-() const;
    CycPoly operator*(const CycPoly& o) const;

    // Division with remainder by a monic divisor; exact over Z.
    // Returns {quotient, remainder} with deg(remainder) < deg(divisor).
    std::pair<CycPoly, CycPoly> divmod_monic(const CycPoly& divisor) const;

    // Exact division; throws if the division leaves a remainder.
    CycPoly divide_exact(const CycPoly& divisor) const;

    Int eval(const Int& x) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Int> c_;
};

}  // namespace nbhc
