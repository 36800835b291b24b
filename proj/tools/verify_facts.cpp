// Audits principality fact files against an exact quadratic-resolvent
// computation, and suggests the facts a scan would need.
//
// For a prime modulus p = 3 (mod 4), K = Q(zeta_p) contains k = Q(sqrt(-p)),
// and an unramified prime ideal P of K with residue field degree s = ord_p(q)
// satisfies N_{K/k}(P) = p_k^(s) for split q (resp. (q)^(s/2) for inert q).
// Since norms of principal ideals are principal:
//   * q split, not represented by the principal form of disc -p, and
//     gcd(s, h(-p)) = 1  =>  P is non-principal.          [any h_K]
// When additionally h_K = h(-p), the Artin map identifies Cl(K) with the
// class group of k through K*H_k (K/k is totally ramified at p, so
// K and the Hilbert class field H_k are linearly disjoint), and the
// identification is two-sided:
//   * q split and represented at (x, y)  =>  P is principal
//     (alpha = x + y(1+sqrt(-p))/2 generates it),
//   * q inert in k  =>  P is principal.
// Everything here is integer arithmetic: form representability is a finite
// search and h(-p) counts reduced forms.

#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nbhc/classdata.hpp"
#include "nbhc/criteria.hpp"
#include "nbhc/numtheory.hpp"
#include "nbhc/quadform.hpp"

using namespace nbhc;

namespace {

enum class Audit { Verified, Unsupported, Contradicted };

struct AuditResult {
    Audit audit;
    std::string detail;
};

AuditResult audit_fact(const PrincipalityFact& fact) {
    const unsigned long p = fact.m;  // normalized modulus
    if (!is_prime(Int(p)) || p % 4 != 3)
        return {Audit::Unsupported, "modulus is not a prime = 3 (mod 4); no quadratic resolvent"};
    const Int d = -Int(p);
    const unsigned long h_k = quad_class_number(d);
    const auto h_K = ClassNumberTable::builtin().lookup(p);
    const bool iso = h_K && *h_K == Int(h_k);
    if (int_gcd(fact.q, Int(p)) != 1)
        return {Audit::Unsupported, "ramified prime; rule-based, no fact needed"};
    const unsigned long s = multiplicative_order(fact.q, p);
    if (s == euler_phi(p)) {
        // inert in the full cyclotomic field: the prime ideal is (q)
        if (fact.status == Principality::AllPrincipal)
            return {Audit::Verified, "inert in Q(zeta_" + std::to_string(p) + "): the prime is (q)"};
        return {Audit::Contradicted, "inert primes are principal, the ideal is (q) itself"};
    }
    if (s % 2 == 0) {
        // inert in the quadratic subfield
        if (!iso) return {Audit::Unsupported, "inert in Q(sqrt(-" + std::to_string(p) +
                                                  ")) but h_K != h(-p); lift not decided here"};
        if (fact.status == Principality::AllPrincipal)
            return {Audit::Verified, "inert in Q(sqrt(-" + std::to_string(p) + ")), class map is 1:1"};
        return {Audit::Contradicted, "inert primes lift principal when h_K = h(-p)"};
    }
    const auto rep = principal_form_representation(fact.q, d);
    const bool norm_coprime = int_gcd(Int(s), Int(h_k)) == 1;
    if (rep) {
        auto [x, y] = *rep;
        std::string wit = fact.q.str() + " = x^2+xy+" + Int((1 + Int(p)) / 4).str() +
                          "y^2 at (x,y)=(" + x.str() + "," + y.str() + ")";
        if (!iso)
            return {Audit::Unsupported, wit + ", but h_K != h(-p); lift not decided here"};
        if (fact.status == Principality::AllPrincipal) return {Audit::Verified, wit};
        return {Audit::Contradicted, wit + " makes the prime principal"};
    }
    // not represented => non-principal below; the norm argument lifts it
    // whenever gcd(s, h(-p)) = 1
    std::string base = "not represented by the principal form of disc -" + std::to_string(p) +
                       ", class order divides h = " + std::to_string(h_k) + ", s = " +
                       std::to_string(s);
    if (!norm_coprime)
        return {Audit::Unsupported, base + "; gcd(s, h) != 1, norm argument degenerates"};
    if (fact.status == Principality::AllNonPrincipal) return {Audit::Verified, base};
    return {Audit::Contradicted, base + " proves non-principality"};
}

int run_verify(const std::string& facts_path) {
    FactStore store = FactStore::load_file(facts_path);
    int verified = 0, unsupported = 0, contradicted = 0;
    for (const PrincipalityFact& fact : store.all()) {
        AuditResult r = audit_fact(fact);
        const char* tag = r.audit == Audit::Verified     ? "VERIFIED    "
                          : r.audit == Audit::Unsupported ? "UNSUPPORTED "
                                                          : "CONTRADICTED";
        std::cout << tag << " m=" << fact.m << " q=" << fact.q.str() << " "
                  << to_string(fact.status) << " :: " << r.detail << "\n";
        if (r.audit == Audit::Verified) ++verified;
        if (r.audit == Audit::Unsupported) ++unsupported;
        if (r.audit == Audit::Contradicted) ++contradicted;
    }
    std::cout << "summary: " << verified << " verified, " << unsupported << " unsupported, "
              << contradicted << " contradicted\n";
    return contradicted == 0 ? 0 : 1;
}

// Lists the principality statuses an ideal-criterion scan would consult,
// split into decided (by rule or fact) and missing.
int run_suggest(DesignKind kind, unsigned long m, long gamma, unsigned long v_max,
                const std::string& facts_path) {
    FactStore store = facts_path.empty() ? FactStore() : FactStore::load_file(facts_path);
    const auto& table = ClassNumberTable::builtin();
    const auto h = table.lookup(m);
    if (!h) {
        std::cout << "class number for m = " << m << " unknown; extension file required\n";
        return 1;
    }
    const unsigned long phi_m = euler_phi(m);
    std::map<Int, std::set<unsigned long>> missing;  // q -> v's blocked on it
    for (unsigned long v = 1; v <= v_max; ++v) {
        FactoredInt w;
        if (kind == DesignKind::NearButsonHadamard) {
            Int b1 = (Int(gamma) + 1) * v - gamma, b2 = Int(v) - gamma;
            if (b1 <= 0 || b2 <= 0) continue;
            w = FactoredInt::from_int(b1) * FactoredInt::from_int(b2).pow(v - 1);
        } else {
            Int b1 = Int(gamma) + 1, b2 = Int(v) - 1, b3 = Int(v) - 1 - gamma;
            if (b1 <= 0 || b2 <= 0 || b3 <= 0) continue;
            w = FactoredInt::from_int(b1) * FactoredInt::from_int(b2) *
                FactoredInt::from_int(b3).pow(v - 1);
        }
        for (const auto& [q, exp] : w.factors()) {
            if (exp % 2 == 0 || int_gcd(q, Int(m)) != 1) continue;
            if (multiplicative_order(q, m) != phi_m / 2) continue;
            unsigned long e = (exp - 1) / 2;
            bool gcd_ok = true;
            for (unsigned long k = 0; k < e && gcd_ok; ++k)
                if (int_gcd(Int(2 * e + 1 - 2 * k), *h) != 1) gcd_ok = false;
            if (!gcd_ok) continue;
            // this q is a live candidate: its own status and the whole
            // t-part's statuses matter
            for (const auto& [r, rexp] : w.factors()) {
                if (principality_status(r, m, table, store).status == Principality::Unknown)
                    missing[r].insert(v);
                (void)rexp;
            }
        }
    }
    if (missing.empty()) {
        std::cout << "no missing principality statuses for " << to_string(kind) << " m=" << m
                  << " gamma=" << gamma << " v<=" << v_max << "\n";
        return 0;
    }
    for (const auto& [q, vs] : missing) {
        std::cout << "missing: m=" << normalize_modulus(m) << " q=" << q.str() << " needed for v in {";
        bool first = true;
        for (unsigned long v : vs) {
            std::cout << (first ? "" : ", ") << v;
            first = false;
        }
        std::cout << "}";
        AuditResult probe = audit_fact(PrincipalityFact{normalize_modulus(m), q,
                                                        Principality::AllNonPrincipal, ""});
        std::cout << "  [resolvent says: " << probe.detail << "]\n";
    }
    return 0;
}

void usage() {
    std::cout << "usage:\n"
              << "  nbhc-verify-facts verify <facts-file>\n"
              << "  nbhc-verify-facts suggest bh|conf <m> <gamma> <v-max> [facts-file]\n";
}

}  // namespace

int main(int argc, char** argv) {
    try {
        if (argc >= 3 && std::strcmp(argv[1], "verify") == 0) return run_verify(argv[2]);
        if (argc >= 6 && std::strcmp(argv[1], "suggest") == 0) {
            DesignKind kind = std::strcmp(argv[2], "conf") == 0 ? DesignKind::NearConference
                                                                : DesignKind::NearButsonHadamard;
            return run_suggest(kind, std::stoul(argv[3]), std::stol(argv[4]), std::stoul(argv[5]),
                               argc >= 7 ? argv[6] : std::string());
        }
        usage();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
