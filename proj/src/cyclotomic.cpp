#include "nbhc/cyclotomic.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace nbhc {

namespace {

std::vector<unsigned> divisors_of(unsigned m) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i * i <= m; ++i) {
        if (m % i == 0) {
            d.push_back(i);
            if (i != m / i) d.push_back(m / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

unsigned totient(unsigned m) {
    if (m == 0) throw std::invalid_argument("totient(0)");
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const CycPoly& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
    static std::map<unsigned, CycPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.  Compute divisors
    // bottom-up so the recursion never re-enters the lock.
    for (unsigned d : divisors_of(m)) {
        if (cache.count(d)) continue;
        CycPoly p = CycPoly::x_pow_minus_one(d);
        for (unsigned e : divisors_of(d)) {
            if (e == d) continue;
            p = p.divide_exact(cache.at(e));
        }
        cache.emplace(d, std::move(p));
    }
    return cache.at(m);
}

CycInt CycInt::zero(unsigned m) {
    if (m == 0) throw std::invalid_argument("CycInt: modulus must be >= 1");
    return CycInt(m, std::vector<Int>(totient(m), Int(0)));
}

CycInt CycInt::integer(unsigned m, Int n) {
    CycInt r = zero(m);
    r.c_[0] = std::move(n);
    return r;
}

CycInt CycInt::root_of_unity(unsigned m, long long k) {
    if (m == 0) throw std::invalid_argument("CycInt: modulus must be >= 1");
    long long e = k % static_cast<long long>(m);
    if (e < 0) e += m;
    return from_poly(m, CycPoly::monomial(static_cast<std::size_t>(e)));
}

CycInt CycInt::from_poly(unsigned m, const CycPoly& p) {
    if (m == 0) throw std::invalid_argument("CycInt: modulus must be >= 1");
    const CycPoly& phi = cyclotomic_polynomial(m);
    CycPoly rem = p.divmod_monic(phi).second;
    std::vector<Int> c(totient(m), Int(0));
    for (std::size_t i = 0; i < rem.coeffs().size(); ++i) c[i] = rem.coeffs()[i];
    return CycInt(m, std::move(c));
}

bool CycInt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
}

bool CycInt::operator<(const CycInt& o) const {
    if (m_ != o.m_) return m_ < o.m_;
    return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

void CycInt::check_same_modulus(const CycInt& o) const {
    if (m_ != o.m_)
        throw std::invalid_argument("CycInt: modulus mismatch (" + std::to_string(m_) + " vs " +
                                    std::to_string(o.m_) + ")");
}

CycInt CycInt::operator+(const CycInt& o) const {
    check_same_modulus(o);
    std::vector<Int> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return CycInt(m_, std::move(r));
}

CycInt CycInt::operator-(const CycInt& o) const {
    check_same_modulus(o);
    std::vector<Int> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return CycInt(m_, std::move(r));
}

CycInt CycInt::operator-() const {
    std::vector<Int> r(c_);
    for (auto& x : r) x = -x;
    return CycInt(m_, std::move(r));
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_same_modulus(o);
    return from_poly(m_, to_poly() * o.to_poly());
}

CycInt CycInt::conjugate() const {
    // zeta^i -> zeta^(m-i); rebuild and reduce.
    std::vector<Int> lift(m_ + 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        std::size_t e = (i == 0) ? 0 : (m_ - i);
        lift[e] += c_[i];
    }
    return from_poly(m_, CycPoly(std::move(lift)));
}

std::optional<Int> CycInt::try_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

CycPoly CycInt::to_poly() const { return CycPoly(c_); }

std::string CycInt::to_string() const { return to_poly().to_string("z"); }

// ---------------------------------------------------------------------------
// Embeddings.  Two fixed precision rungs; the second is far beyond anything a
// nonzero real cyclotomic integer of desk-scale height can hide below.

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using Float300 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<300>>;

template <typename F>
std::pair<F, F> embed_complex(const CycInt& a) {
    const F pi = boost::math::constants::pi<F>();
    const unsigned m = a.modulus();
    F re = 0, im = 0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Int& ci = a.coeffs()[i];
        if (ci == 0) continue;
        F angle = 2 * pi * F(static_cast<unsigned>(i)) / F(m);
        F c(ci);
        re += c * cos(angle);
        im += c * sin(angle);
    }
    return {re, im};
}

template <typename F>
F coeff_l1(const CycInt& a) {
    F s = 0;
    for (const Int& ci : a.coeffs()) s += F(int_abs(ci));
    return s;
}

}  // namespace

double complex_abs(const CycInt& a) {
    auto [re, im] = embed_complex<Float50>(a);
    return sqrt(re * re + im * im).convert_to<double>();
}

int real_embedding_sign(const CycInt& a) {
    if (!a.is_real()) throw std::invalid_argument("real_embedding_sign: element is not real");
    if (a.is_zero()) return 0;
    {
        auto [re, im] = embed_complex<Float50>(a);
        (void)im;
        Float50 bound = coeff_l1<Float50>(a) * Float50("1e-40") + Float50("1e-40");
        if (re > bound) return 1;
        if (re < -bound) return -1;
    }
    auto [re, im] = embed_complex<Float300>(a);
    (void)im;
    Float300 bound = coeff_l1<Float300>(a) * Float300("1e-280") + Float300("1e-280");
    if (re > bound) return 1;
    if (re < -bound) return -1;
    throw std::runtime_error("real_embedding_sign: undecided at 300 digits for nonzero element");
}

// ---------------------------------------------------------------------------
// Field norm via fraction-free determinant of the multiplication matrix.

namespace {

Int bareiss_determinant(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

}  // namespace

Int field_norm(const CycInt& a) {
    if (a.is_zero()) return 0;
    if (auto n = a.try_integer()) return int_pow(*n, totient(a.modulus()));
    const unsigned phi = totient(a.modulus());
    std::vector<std::vector<Int>> mat(phi, std::vector<Int>(phi, Int(0)));
    CycInt power = CycInt::root_of_unity(a.modulus(), 0);
    const CycInt zeta = CycInt::root_of_unity(a.modulus(), 1);
    for (unsigned j = 0; j < phi; ++j) {
        CycInt col = a * power;
        for (unsigned i = 0; i < phi; ++i) mat[i][j] = col.coeffs()[i];
        power = power * zeta;
    }
    return bareiss_determinant(std::move(mat));
}

// ---------------------------------------------------------------------------
// Sums of roots of unity.

namespace {

struct RootsSearch {
    unsigned m;
    std::vector<CycInt> roots;          // zeta^0 .. zeta^(m-1)
    std::vector<double> abs_cache_eps;  // unused slot kept for clarity
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    // Failed states: (remaining, min_exponent, target coefficients).
    std::map<std::tuple<unsigned, unsigned, std::vector<Int>>, bool> failed;
    std::vector<unsigned> chosen;

    explicit RootsSearch(unsigned m_, std::uint64_t budget_) : m(m_), budget(budget_) {
        roots.reserve(m);
        for (unsigned k = 0; k < m; ++k) roots.push_back(CycInt::root_of_unity(m, k));
    }

    bool dfs(const CycInt& target, unsigned min_exp, unsigned remaining) {
        if (remaining == 0) return target.is_zero();
        if (++nodes > budget) return false;
        // A sum of `remaining` unit vectors cannot reach further than that.
        if (complex_abs(target) > static_cast<double>(remaining) + 1e-6) return false;
        auto key = std::make_tuple(remaining, min_exp, target.coeffs());
        if (failed.count(key)) return false;
        for (unsigned e = min_exp; e < m; ++e) {
            chosen.push_back(e);
            if (dfs(target - roots[e], e, remaining - 1)) return true;
            chosen.pop_back();
        }
        failed.emplace(std::move(key), true);
        return false;
    }
};

unsigned smallest_prime_factor(unsigned m) {
    for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= m; ++p)
        if (m % p == 0) return p;
    return m;
}

unsigned distinct_prime_count(unsigned m) {
    unsigned count = 0;
    for (unsigned p = 2; m > 1; ++p) {
        if (m % p == 0) {
            ++count;
            while (m % p == 0) m /= p;
        }
    }
    return count;
}

// Direct representation of a nonzero integer n as a sum of m-th roots:
//   n > 0:        n copies of zeta^0, size n (minimal: |sum| <= count).
//   n < 0, m even: |n| copies of zeta^(m/2) = -1, size |n| (minimal likewise).
//   n < 0, m odd:  |n| copies of -(1) written via the smallest prime p | m,
//                  -1 = zeta_p + ... + zeta_p^(p-1), size |n|(p-1).  Minimal
//                  when m has at most two distinct primes: a vanishing sum of
//                  m-th roots with m = p^a q^b is an N-combination of rotated
//                  full p- and q-orbits, a rotated orbit contains the root 1
//                  at most once, and the |n| ones forced into the vanishing
//                  sum (sum of roots) + |n|*1 = 0 therefore need |n| orbits.
std::optional<RootsOfUnityRep> integer_rep(const Int& n, unsigned m, unsigned g_max) {
    RootsOfUnityRep rep;
    if (n > 0) {
        if (n > g_max) return std::nullopt;
        rep.g = n.convert_to<unsigned>();
        rep.exponents.assign(rep.g, 0u);
        return rep;
    }
    Int k = -n;
    if (m % 2 == 0) {
        if (k > g_max) return std::nullopt;
        rep.g = k.convert_to<unsigned>();
        rep.exponents.assign(rep.g, m / 2);
        return rep;
    }
    if (m == 1) return std::nullopt;  // negative integers are not sums of 1's
    const unsigned p = smallest_prime_factor(m);
    Int size = k * (p - 1);
    if (size > g_max) return std::nullopt;
    rep.g = size.convert_to<unsigned>();
    const unsigned step = m / p;
    for (Int i = 0; i < k; ++i)
        for (unsigned j = 1; j < p; ++j) rep.exponents.push_back(j * step);
    std::sort(rep.exponents.begin(), rep.exponents.end());
    return rep;
}

}  // namespace

std::optional<RootsOfUnityRep> roots_of_unity_representation(const CycInt& beta, unsigned g_max,
                                                             std::uint64_t node_budget) {
    if (beta.is_zero()) throw std::invalid_argument("roots_of_unity_representation: beta must be nonzero");
    const unsigned m = beta.modulus();
    if (auto n = beta.try_integer()) {
        auto direct = integer_rep(*n, m, g_max);
        // Proven minimal for <= 2 distinct primes; otherwise give the
        // deepening search a chance to beat the construction.
        if (direct && (distinct_prime_count(m) <= 2 || *n > 0)) return direct;
        unsigned cap = direct ? direct->g - 1 : g_max;
        RootsSearch search(m, node_budget);
        for (unsigned g = 1; g <= std::min(cap, g_max); ++g) {
            search.chosen.clear();
            if (search.dfs(beta, 0, g)) return RootsOfUnityRep{g, search.chosen};
            if (search.nodes > search.budget) break;
        }
        return direct;
    }
    RootsSearch search(m, node_budget);
    for (unsigned g = 1; g <= g_max; ++g) {
        search.chosen.clear();
        if (search.dfs(beta, 0, g)) return RootsOfUnityRep{g, search.chosen};
        if (search.nodes > search.budget) break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Literal parsing: sums of terms  [+-] [c] [* ] [z [^e]]

CycInt parse_cyclotomic_literal(const std::string& text, unsigned m) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty gamma literal");
    CycPoly acc;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("dangling sign in gamma literal");
        Int coeff = 1;
        bool have_digits = false;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits.push_back(s[i]);
            ++i;
            have_digits = true;
        }
        if (have_digits) coeff = Int(digits);
        if (i < s.size() && s[i] == '*') {
            if (!have_digits) throw std::invalid_argument("misplaced '*' in gamma literal");
            ++i;
            if (i >= s.size() || s[i] != 'z') throw std::invalid_argument("expected 'z' after '*'");
        }
        std::size_t exponent = 0;
        if (i < s.size() && s[i] == 'z') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
                if (e.empty()) throw std::invalid_argument("expected exponent digits after '^'");
                exponent = std::stoull(e);
            }
        } else if (!have_digits) {
            throw std::invalid_argument("expected coefficient or 'z' in gamma literal");
        }
        acc = acc + CycPoly::monomial(exponent % m, sign > 0 ? coeff : Int(-coeff));
    }
    return CycInt::from_poly(m, acc);
}

}  // namespace nbhc
