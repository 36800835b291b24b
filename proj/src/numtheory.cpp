#include "nbhc/numtheory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nbhc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Complete witness set for n < 2^64 (Sorenson-Webster).
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool miller_rabin_base(const Int& n, const Int& a) {
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    Int x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

int jacobi_symbol(Int a, Int n) {
    // n odd positive
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            Int r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a % 4) == 3 && (n % 4) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// Strong Lucas test with Selfridge parameters (BPSW second half).
bool strong_lucas(const Int& n) {
    if (is_perfect_square(n)) return false;
    long long dd = 5;
    while (true) {
        int j = jacobi_symbol(Int(dd), n);
        if (j == -1) break;
        if (j == 0 && int_abs(Int(dd)) != n) return false;
        dd = dd > 0 ? -(dd + 2) : -(dd - 2);
    }
    const Int D = dd;
    const Int P = 1, Q = (1 - D) / 4;
    Int d = n + 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::vector<int> bits;
    for (Int t = d; t > 0; t >>= 1) bits.push_back(static_cast<int>(t & 1));
    // Binary ladder on the index: U_1 = 1, V_1 = P, tracking Q^k.
    Int u = 1, v = P % n, qk = Q % n;
    if (qk < 0) qk += n;
    for (auto it = bits.rbegin() + 1; it != bits.rend(); ++it) {
        // double: U_2k = U*V, V_2k = V^2 - 2 Q^k
        Int u2 = u * v % n;
        Int v2 = (v * v - 2 * qk) % n;
        u = u2;
        v = v2;
        qk = qk * qk % n;
        if (*it) {
            // U_{k+1} = (P U + V)/2, V_{k+1} = (D U + P V)/2 (mod n, n odd)
            Int un = P * u + v;
            if ((un & 1) != 0) un += n;
            un = un / 2 % n;
            Int vn = D * u + P * v;
            if ((vn & 1) != 0) vn += n;
            vn = vn / 2 % n;
            u = un;
            v = vn;
            qk = qk * (Q % n) % n;
        }
    }
    auto norm = [&](Int x) {
        x %= n;
        if (x < 0) x += n;
        return x;
    };
    u = norm(u);
    v = norm(v);
    qk = norm(qk);
    if (u == 0 || v == 0) return true;
    for (int r = 1; r < s; ++r) {
        v = norm(v * v - 2 * qk);
        if (v == 0) return true;
        qk = qk * qk % n;
    }
    return false;
}

constexpr u64 kU64Max = ~0ull;

bool fits_u64(const Int& n) { return n >= 0 && n <= Int(kU64Max); }

u64 pollard_brent_u64(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int power = 1, lam = 1;
        auto f = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
        x = f(x);
        while (true) {
            if (power == lam) {
                y = x;
                power *= 2;
                lam = 0;
            }
            x = f(x);
            ++lam;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle; retry with next c
            q = mulmod_u64(q, diff, n);
            if (lam % 64 == 0 || power == lam) {
                d = std::__gcd(q, n);
                if (d != 1) break;
            }
        }
        if (d == 0 || d == 1) {
            d = std::__gcd(q, n);
        }
        if (d != 1 && d != n) return d;
        // rare: retry with a fresh increment
    }
}

Int pollard_brent_big(const Int& n) {
    if ((n & 1) == 0) return 2;
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1;
        long long power = 1, lam = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        x = f(x);
        while (true) {
            if (power == lam) {
                y = x;
                power *= 2;
                lam = 0;
            }
            x = f(x);
            ++lam;
            Int diff = int_abs(x - y);
            if (diff == 0) break;
            q = q * diff % n;
            if (lam % 32 == 0 || power == lam) {
                d = int_gcd(q, n);
                if (d != 1) break;
            }
        }
        if (d == 0 || d == 1) d = int_gcd(q, n);
        if (d != 1 && d != n) return d;
    }
}

void factor_u64_into(u64 n, std::map<Int, unsigned long>& out, bool& certified) {
    while (n > 1) {
        if (miller_rabin_u64(n)) {
            ++out[Int(n)];
            return;
        }
        // small trial division first
        bool found = false;
        for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
            if (n % p == 0) {
                ++out[Int(p)];
                n /= p;
                found = true;
                break;
            }
        }
        if (found) continue;
        u64 d = pollard_brent_u64(n);
        factor_u64_into(d, out, certified);
        n /= d;
    }
}

void factor_big_into(Int n, std::map<Int, unsigned long>& out, bool& certified) {
    if (n <= 1) return;
    if (fits_u64(n)) {
        factor_u64_into(n.convert_to<u64>(), out, certified);
        return;
    }
    for (u64 p = 2; p < 100000; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
        if (fits_u64(n)) {
            factor_u64_into(n.convert_to<u64>(), out, certified);
            return;
        }
    }
    if (is_prime(n)) {
        certified = false;  // only BPSW at this size
        ++out[n];
        return;
    }
    Int d = pollard_brent_big(n);
    factor_big_into(d, out, certified);
    factor_big_into(n / d, out, certified);
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return miller_rabin_u64(n.convert_to<u64>());
    if ((n & 1) == 0) return false;
    if (!miller_rabin_base(n, 2)) return false;
    return strong_lucas(n);
}

FactoredInt FactoredInt::one() {
    FactoredInt f;
    f.sign_ = 1;
    return f;
}

FactoredInt FactoredInt::from_int(const Int& n) {
    FactoredInt f;
    if (n == 0) return f;
    f.sign_ = n > 0 ? 1 : -1;
    factor_big_into(int_abs(n), f.factors_, f.certified_);
    return f;
}

FactoredInt factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    return FactoredInt::from_int(n);
}

FactoredInt FactoredInt::operator*(const FactoredInt& o) const {
    if (is_zero() || o.is_zero()) return zero();
    FactoredInt r;
    r.sign_ = sign_ * o.sign_;
    r.certified_ = certified_ && o.certified_;
    r.factors_ = factors_;
    for (const auto& [p, e] : o.factors_) r.factors_[p] += e;
    return r;
}

FactoredInt FactoredInt::pow(unsigned long e) const {
    if (is_zero()) return e == 0 ? one() : zero();
    FactoredInt r;
    r.sign_ = (sign_ < 0 && (e & 1)) ? -1 : 1;
    r.certified_ = certified_;
    if (e == 0) return r;
    for (const auto& [p, k] : factors_) r.factors_[p] = k * e;
    return r;
}

Int FactoredInt::value() const {
    if (is_zero()) return 0;
    Int v = sign_;
    for (const auto& [p, e] : factors_) v *= int_pow(p, e);
    return v;
}

unsigned long FactoredInt::exponent_of(const Int& p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0ul : it->second;
}

Int FactoredInt::square_free_part() const {
    Int r = 1;
    for (const auto& [p, e] : factors_)
        if (e & 1) r *= p;
    return r;
}

std::string FactoredInt::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (sign_ < 0) os << "-";
    if (factors_.empty()) {
        os << "1";
        return os.str();
    }
    bool first = true;
    for (const auto& [p, e] : factors_) {
        if (!first) os << "*";
        first = false;
        os << p.str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

Int square_free_part(const FactoredInt& w) {
    if (w.sign() <= 0) throw std::invalid_argument("square_free_part: w must be positive");
    return w.square_free_part();
}

unsigned long euler_phi(unsigned long m) {
    if (m == 0) throw std::invalid_argument("euler_phi(0)");
    unsigned long result = m, n = m;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

unsigned long multiplicative_order(const Int& a, unsigned long n) {
    if (n < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    Int ar = a % n;
    if (ar < 0) ar += n;
    if (int_gcd(ar, Int(n)) != 1)
        throw std::invalid_argument("multiplicative_order: arguments are not coprime");
    unsigned long order = euler_phi(n);
    FactoredInt of = factorize(Int(order));
    for (const auto& [p, e] : of.factors()) {
        unsigned long pl = p.convert_to<unsigned long>();
        for (unsigned long i = 0; i < e; ++i) {
            if (pow_mod(ar, Int(order / pl), Int(n)) == 1)
                order /= pl;
            else
                break;
        }
    }
    return order;
}

bool is_self_conjugate(const Int& p, unsigned long m) {
    if (m == 0) throw std::invalid_argument("is_self_conjugate: m must be >= 1");
    if (int_gcd(p, Int(m)) != 1)
        throw std::invalid_argument("is_self_conjugate: gcd(p, m) != 1");
    if (m <= 2) return true;
    unsigned long f = multiplicative_order(p, m);
    if (f % 2 != 0) return false;
    return pow_mod(p, Int(f / 2), Int(m)) == Int(m - 1);
}

bool semigroup_representable(unsigned long n, const std::set<unsigned long>& primes) {
    if (primes.empty()) throw std::invalid_argument("semigroup_representable: empty prime set");
    std::vector<char> reachable(n + 1, 0);
    reachable[0] = 1;
    for (unsigned long p : primes) {
        for (unsigned long i = p; i <= n; ++i)
            if (reachable[i - p]) reachable[i] = 1;
    }
    return reachable[n] != 0;
}

std::set<unsigned long> prime_divisors(unsigned long m) {
    std::set<unsigned long> out;
    unsigned long n = m;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.insert(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.insert(n);
    return out;
}

}  // namespace nbhc
