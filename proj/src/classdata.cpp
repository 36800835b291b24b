#include "nbhc/classdata.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nbhc/numtheory.hpp"

namespace nbhc {

namespace {

struct BuiltinEntry {
    unsigned m;
    long long h;
};

// h_m for m <= 70 (Washington's class number table).
constexpr BuiltinEntry kBuiltinClassNumbers[] = {
    {1, 1},    {2, 1},    {3, 1},    {4, 1},    {5, 1},     {6, 1},  {7, 1},      {8, 1},
    {9, 1},    {10, 1},   {11, 1},   {12, 1},   {13, 1},    {14, 1}, {15, 1},     {16, 1},
    {17, 1},   {18, 1},   {19, 1},   {20, 1},   {21, 1},    {22, 1}, {23, 3},     {24, 1},
    {25, 1},   {26, 1},   {27, 1},   {28, 1},   {29, 8},    {30, 1}, {31, 9},     {32, 1},
    {33, 1},   {34, 1},   {35, 1},   {36, 1},   {37, 37},   {38, 1}, {39, 2},     {40, 1},
    {41, 121}, {42, 1},   {43, 211}, {44, 1},   {45, 1},    {46, 3}, {47, 695},   {48, 1},
    {49, 43},  {50, 1},   {51, 5},   {52, 3},   {53, 48891}, {54, 1}, {55, 10},   {56, 2},
    {57, 9},   {58, 8},   {59, 41421}, {60, 1}, {61, 76301}, {62, 9}, {63, 7},    {64, 17},
    {65, 64},  {66, 1},   {67, 853513}, {68, 8}, {69, 69},  {70, 1},
};

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Splits "payload # comment"; returns {payload, comment}.
std::pair<std::string, std::string> split_comment(const std::string& line) {
    auto pos = line.find('#');
    if (pos == std::string::npos) return {strip(line), ""};
    return {strip(line.substr(0, pos)), strip(line.substr(pos + 1))};
}

bool is_prime_power(unsigned long m, unsigned long* base = nullptr) {
    if (m < 2) return false;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            if (m != 1) return false;
            if (base) *base = p;
            return true;
        }
    }
    if (base) *base = m;
    return true;
}

}  // namespace

const ClassNumberTable& ClassNumberTable::builtin() {
    static const ClassNumberTable table = [] {
        ClassNumberTable t;
        for (const auto& e : kBuiltinClassNumbers)
            t.entries_[e.m] = Entry{e.m, Int(e.h), "builtin"};
        return t;
    }();
    return table;
}

void ClassNumberTable::load_extension_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open class number file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto [payload, comment] = split_comment(line);
        if (payload.empty()) continue;
        std::istringstream is(payload);
        unsigned long m;
        std::string hs;
        if (!(is >> m >> hs))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'm h_m # source'");
        Int h(hs);
        if (h <= 0)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": h_m must be positive");
        const unsigned long key = normalize_modulus(m);
        auto it = entries_.find(key);
        if (it != entries_.end()) {
            if (it->second.h != h)
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": conflicting class number for m = " + std::to_string(m));
            continue;
        }
        entries_[key] = Entry{key, h, comment.empty() ? "extension" : comment};
    }
}

std::optional<Int> ClassNumberTable::lookup(unsigned long m) const {
    auto it = entries_.find(normalize_modulus(m));
    if (it == entries_.end()) return std::nullopt;
    return it->second.h;
}

std::vector<ClassNumberTable::Entry> ClassNumberTable::entries_sorted() const {
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto& [m, e] : entries_) out.push_back(e);
    return out;
}

std::string ClassNumberTable::render() const {
    std::ostringstream os;
    for (const auto& e : entries_sorted()) os << e.m << " " << e.h.str() << " # " << e.source << "\n";
    return os.str();
}

SplittingInfo splitting_pattern(const Int& q, unsigned long m) {
    if (m < 3) throw std::invalid_argument("splitting_pattern: m must be >= 3");
    SplittingInfo info;
    info.q = q;
    info.m = m;
    if (int_gcd(q, Int(m)) != 1) {
        info.ramified = true;
        return info;
    }
    info.f = multiplicative_order(q, m);
    info.g = euler_phi(m) / info.f;
    return info;
}

std::string to_string(Principality p) {
    switch (p) {
        case Principality::AllPrincipal: return "principal";
        case Principality::AllNonPrincipal: return "nonprincipal";
        default: return "unknown";
    }
}

FactStore FactStore::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open facts file: " + path);
    FactStore store;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto [payload, comment] = split_comment(line);
        if (payload.empty()) continue;
        std::istringstream is(payload);
        unsigned long m;
        std::string qs, status;
        if (!(is >> m >> qs >> status))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'm q principal|nonprincipal # provenance'");
        PrincipalityFact fact;
        fact.m = normalize_modulus(m);
        fact.q = Int(qs);
        if (status == "principal")
            fact.status = Principality::AllPrincipal;
        else if (status == "nonprincipal")
            fact.status = Principality::AllNonPrincipal;
        else
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": status must be 'principal' or 'nonprincipal'");
        fact.provenance = comment;
        try {
            store.add(std::move(fact));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return store;
}

void FactStore::add(PrincipalityFact fact) {
    auto key = std::make_pair(fact.m, fact.q);
    if (facts_.count(key))
        throw std::runtime_error("duplicate principality fact for (m, q) = (" +
                                 std::to_string(fact.m) + ", " + fact.q.str() + ")");
    facts_.emplace(std::move(key), std::move(fact));
}

const PrincipalityFact* FactStore::find(unsigned long m, const Int& q) const {
    auto it = facts_.find(std::make_pair(normalize_modulus(m), q));
    return it == facts_.end() ? nullptr : &it->second;
}

std::vector<PrincipalityFact> FactStore::all() const {
    std::vector<PrincipalityFact> out;
    out.reserve(facts_.size());
    for (const auto& [k, f] : facts_) out.push_back(f);
    return out;
}

PrincipalityAnswer principality_status(const Int& q, unsigned long m,
                                       const ClassNumberTable& table, const FactStore& facts) {
    if (m < 3) throw std::invalid_argument("principality_status: m must be >= 3");
    const unsigned long mn = normalize_modulus(m);
    if (auto h = table.lookup(mn); h && *h == 1)
        return {Principality::AllPrincipal, "h_" + std::to_string(mn) + " = 1", nullptr};
    if (int_gcd(q, Int(mn)) == 1) {
        // inert means the prime above q is (q) itself
        if (multiplicative_order(q, mn) == euler_phi(mn))
            return {Principality::AllPrincipal, "inert: ord_" + std::to_string(mn) + "(" + q.str() +
                                                    ") = phi(" + std::to_string(mn) + ")",
                    nullptr};
    } else {
        unsigned long p = 0;
        if (is_prime_power(mn, &p) && Int(p) == q)
            return {Principality::AllPrincipal,
                    "ramified prime of the prime-power modulus, generated by 1 - zeta", nullptr};
    }
    if (const PrincipalityFact* fact = facts.find(mn, q))
        return {fact->status, fact->provenance, fact};
    return {Principality::Unknown, "no rule or stored fact applies", nullptr};
}

// ---------------------------------------------------------------------------
// Generator search.

namespace {

// Prime p = 1 (mod m) together with a primitive m-th root of unity in F_p;
// lets the norm of a candidate be evaluated as a product of polynomial values.
struct ModularNormEvaluator {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> root_powers;  // omega^k, k = 0..m-1
    std::vector<unsigned> unit_exponents;    // k coprime to m

    explicit ModularNormEvaluator(unsigned long m) {
        for (std::uint64_t cand = 2 * m + 1;; cand += m) {
            if (!is_prime(Int(cand))) continue;
            p = cand;
            std::uint64_t omega = 0;
            for (std::uint64_t a = 2; a < p; ++a) {
                std::uint64_t w = pow_mod(Int(a), Int((p - 1) / m), Int(p)).convert_to<std::uint64_t>();
                if (w == 1) continue;
                bool primitive = true;
                for (unsigned long r : prime_divisors(m))
                    if (pow_mod(Int(w), Int(m / r), Int(p)) == 1) primitive = false;
                if (primitive) {
                    omega = w;
                    break;
                }
            }
            if (omega == 0) continue;
            root_powers.resize(m);
            root_powers[0] = 1;
            for (unsigned long k = 1; k < m; ++k)
                root_powers[k] = static_cast<std::uint64_t>(
                    (unsigned __int128)(root_powers[k - 1]) * omega % p);
            for (unsigned k = 0; k < m; ++k)
                if (int_gcd(Int(k), Int(m)) == 1) unit_exponents.push_back(k);
            return;
        }
    }

    // Norm of the candidate with the given power-basis coefficients, mod p.
    std::uint64_t norm_mod_p(const std::vector<long>& coeffs) const {
        unsigned __int128 prod = 1;
        for (unsigned k : unit_exponents) {
            // evaluate at omega^k by Horner over precomputed powers
            unsigned __int128 val = 0;
            std::uint64_t point = root_powers[k];
            for (std::size_t i = coeffs.size(); i-- > 0;) {
                val = (val * point);
                long c = coeffs[i];
                val += (c >= 0) ? static_cast<std::uint64_t>(c)
                                : p - static_cast<std::uint64_t>(-c) % p;
                val %= p;
            }
            prod = prod * static_cast<std::uint64_t>(val) % p;
            if (prod == 0) return 0;
        }
        return static_cast<std::uint64_t>(prod);
    }
};

}  // namespace

GeneratorSearchResult find_generator(const Int& q, unsigned long m, long coeff_bound,
                                     std::uint64_t max_candidates) {
    if (m == 0 || int_gcd(q, Int(m)) != 1)
        throw std::invalid_argument("find_generator: requires gcd(q, m) = 1");
    if (coeff_bound < 1) throw std::invalid_argument("find_generator: coeff_bound must be >= 1");
    GeneratorSearchResult result;
    const unsigned long f = multiplicative_order(q, m);
    const unsigned phi = totient(static_cast<unsigned>(m));
    const Int target = int_pow(q, f);
    if (f == euler_phi(m)) {
        // inert: the prime above q is (q) itself
        result.witness = CycInt::integer(static_cast<unsigned>(m), q);
        return result;
    }
    ModularNormEvaluator eval(m);
    const std::uint64_t target_mod = (target % eval.p).convert_to<std::uint64_t>();
    std::vector<long> coeffs(phi);
    // Shells of growing sup-norm, so the first hit has small coefficients.
    for (long b = 1; b <= coeff_bound; ++b) {
        std::fill(coeffs.begin(), coeffs.end(), -b);
        auto advance = [&]() {
            for (std::size_t i = coeffs.size(); i-- > 0;) {
                if (coeffs[i] < b) {
                    ++coeffs[i];
                    return true;
                }
                coeffs[i] = -b;
            }
            return false;
        };
        do {
            bool on_shell = std::any_of(coeffs.begin(), coeffs.end(),
                                        [&](long c) { return c == b || c == -b; });
            if (!on_shell) continue;  // covered by a smaller shell
            if (result.candidates >= max_candidates) {
                result.exhausted = false;
                return result;
            }
            ++result.candidates;
            if (eval.norm_mod_p(coeffs) != target_mod) continue;
            std::vector<Int> big(coeffs.begin(), coeffs.end());
            CycInt alpha = CycInt::from_poly(static_cast<unsigned>(m), CycPoly(std::move(big)));
            if (int_abs(field_norm(alpha)) == target) {
                // canonical sign: first nonzero coefficient positive
                for (const Int& c : alpha.coeffs()) {
                    if (c == 0) continue;
                    if (c < 0) alpha = -alpha;
                    break;
                }
                result.witness = alpha;
                return result;
            }
        } while (advance());
    }
    return result;
}

}  // namespace nbhc
