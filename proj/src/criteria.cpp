#include "nbhc/criteria.hpp"

#include <algorithm>
#include <sstream>

namespace nbhc {

namespace {

Verdict make(Criterion c, VerdictStatus s, std::string reason) {
    Verdict w;
    w.criterion = c;
    w.status = s;
    w.reason = std::move(reason);
    return w;
}

Assumption class_number_assumption(unsigned long m, const Int& h) {
    Assumption a;
    a.kind = Assumption::Kind::ClassNumber;
    a.m = normalize_modulus(m);
    a.h = h;
    a.provenance = "class number table";
    return a;
}

Assumption fact_assumption(const PrincipalityFact& f) {
    Assumption a;
    a.kind = Assumption::Kind::Principality;
    a.m = f.m;
    a.q = f.q;
    a.status = f.status;
    a.provenance = f.provenance;
    return a;
}

// Candidate representation sizes g for -gamma, each a genuine sum of g m-th
// roots of unity.  For integer gamma: the closed form -gamma + m(gamma+|gamma|)/2
// and the minimal constructive size; otherwise the deepening search.
std::vector<unsigned long> candidate_g_values(const CycInt& gamma, unsigned long m) {
    std::vector<unsigned long> out;
    const CycInt beta = -gamma;
    if (auto n = gamma.try_integer()) {
        Int closed = -*n + Int(m) * (*n + int_abs(*n)) / 2;
        out.push_back(closed.convert_to<unsigned long>());
        if (!beta.is_zero()) {
            if (auto rep = roots_of_unity_representation(beta, default_g_max(m)))
                out.push_back(rep->g);
        }
    } else {
        if (auto rep = roots_of_unity_representation(beta, default_g_max(m)))
            out.push_back(rep->g);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int w1_of(unsigned long v, const Int& gamma) {
    Int w = (gamma + 1) * v - gamma;
    if (v % 2 == 0) w *= Int(v) - gamma;
    return w;
}

Int w2_of(unsigned long v, const Int& gamma) {
    Int w = (Int(v) - 1) * (gamma + 1);
    if (v % 2 == 0) w *= Int(v) - 1 - gamma;
    return w;
}

}  // namespace

Verdict check_gamma_range(unsigned long v, const CycInt& gamma, DesignKind kind) {
    if (!gamma.is_real()) throw std::invalid_argument("check_gamma_range: gamma must be real");
    if (v < 1) throw std::invalid_argument("check_gamma_range: v must be >= 1");
    const unsigned m = gamma.modulus();
    // Leading determinant factor: (gamma+1)v - gamma = gamma(v-1) + v for
    // BH, gamma + 1 for conference; the power factor is positive whenever
    // the leading one is negative, so its sign decides.
    CycInt lead = kind == DesignKind::NearButsonHadamard
                      ? gamma * CycInt::integer(m, Int(v) - 1) + CycInt::integer(m, Int(v))
                      : gamma + CycInt::integer(m, 1);
    if (kind == DesignKind::NearConference && v < 2)
        return make(Criterion::GammaRange, VerdictStatus::Inconclusive, "vacuous for v = 1");
    if (lead.is_zero())
        return make(Criterion::GammaRange, VerdictStatus::Inconclusive,
                    "boundary: Gram determinant vanishes");
    if (real_embedding_sign(lead) < 0) {
        return make(Criterion::GammaRange, VerdictStatus::Excluded,
                    kind == DesignKind::NearButsonHadamard
                        ? "gamma < -v/(v-1) makes the Gram determinant negative"
                        : "gamma < -1 makes the Gram determinant negative");
    }
    return make(Criterion::GammaRange, VerdictStatus::Inconclusive,
                "Gram determinant is non-negative");
}

Verdict lam_leung_check(unsigned long v, unsigned long m, const CycInt& gamma, DesignKind kind) {
    if (m < 2) throw std::invalid_argument("lam_leung_check: m must be >= 2");
    if (v < 1) throw std::invalid_argument("lam_leung_check: v must be >= 1");
    if (!gamma.is_real()) throw std::invalid_argument("lam_leung_check: gamma must be real");
    // The vanishing sum comes from an off-diagonal Gram entry; a 1x1 matrix
    // has none.
    if (v == 1)
        return make(Criterion::LamLeung, VerdictStatus::Inconclusive, "vacuous for v = 1");
    const std::set<unsigned long> primes = prime_divisors(m);
    const auto gs = candidate_g_values(gamma, m);
    if (gs.empty())
        return make(Criterion::LamLeung, VerdictStatus::Inconclusive,
                    "no representation of -gamma as a sum of roots of unity found within bounds");
    for (unsigned long g : gs) {
        long long target = static_cast<long long>(v) + static_cast<long long>(g);
        if (kind == DesignKind::NearConference) target -= 2;
        if (target < 0) continue;  // v = 1 conference corner, vacuous constraint
        if (!semigroup_representable(static_cast<unsigned long>(target), primes)) {
            Verdict w = make(Criterion::LamLeung, VerdictStatus::Excluded, "");
            std::ostringstream os;
            os << (kind == DesignKind::NearConference ? "v - 2 + g = " : "v + g = ") << target
               << " is not a non-negative combination of the primes of m";
            w.reason = os.str();
            w.witness = LamLeungWitness{g, static_cast<unsigned long>(target), primes};
            return w;
        }
    }
    std::ostringstream os;
    os << "all candidate g pass (g in {";
    for (std::size_t i = 0; i < gs.size(); ++i) os << (i ? ", " : "") << gs[i];
    os << "})";
    return make(Criterion::LamLeung, VerdictStatus::Inconclusive, os.str());
}

Verdict brock_check(unsigned long v, unsigned long m, const Int& gamma, DesignKind kind) {
    if (gamma < -1) throw std::invalid_argument("brock_check: gamma must be >= -1");
    const Int w = kind == DesignKind::NearButsonHadamard ? w1_of(v, gamma) : w2_of(v, gamma);
    if (w <= 0)
        return make(Criterion::BrockSelfConjugacy, VerdictStatus::Inconclusive,
                    "degenerate: w = " + w.str());
    const FactoredInt wf = factorize(w);
    std::vector<Int> skipped;
    for (const auto& [p, e] : wf.factors()) {
        if (e % 2 == 0) continue;
        if (int_gcd(p, Int(m)) != 1) {
            skipped.push_back(p);
            continue;  // self-conjugacy is defined only for p coprime to m
        }
        if (is_self_conjugate(p, m)) {
            Verdict out = make(Criterion::BrockSelfConjugacy, VerdictStatus::Excluded, "");
            std::ostringstream os;
            os << "p = " << p.str() << " divides the square-free part of w = " << w.str()
               << " and is self-conjugate mod " << m;
            out.reason = os.str();
            out.witness = BrockWitness{p, w};
            return out;
        }
    }
    std::ostringstream os;
    os << "no self-conjugate prime in the square-free part of w = " << w.str();
    if (!skipped.empty()) {
        os << " (skipped, dividing m:";
        for (const auto& p : skipped) os << " " << p.str();
        os << ")";
    }
    return make(Criterion::BrockSelfConjugacy, VerdictStatus::Inconclusive, os.str());
}

Verdict ideal_check(unsigned long v, unsigned long m, const Int& gamma, DesignKind kind,
                    const ClassNumberTable& table, const FactStore& facts) {
    if (gamma < -1) throw std::invalid_argument("ideal_check: gamma must be >= -1");
    if (m < 3) throw std::invalid_argument("ideal_check: m must be >= 3");
    // Gram determinant in factored form; the power (v-gamma)^(v-1) is never
    // expanded.
    FactoredInt w;
    if (kind == DesignKind::NearButsonHadamard) {
        Int base1 = (gamma + 1) * v - gamma;
        Int base2 = Int(v) - gamma;
        if (base1 <= 0 || base2 <= 0)
            return make(Criterion::IdealDecomposition, VerdictStatus::Inconclusive,
                        "degenerate: nonpositive determinant factor");
        w = FactoredInt::from_int(base1) * FactoredInt::from_int(base2).pow(v - 1);
    } else {
        Int base1 = gamma + 1;
        Int base2 = Int(v) - 1;
        Int base3 = Int(v) - 1 - gamma;
        if (base1 <= 0 || base2 <= 0 || base3 <= 0)
            return make(Criterion::IdealDecomposition, VerdictStatus::Inconclusive,
                        "degenerate: nonpositive determinant factor");
        w = FactoredInt::from_int(base1) * FactoredInt::from_int(base2) *
            FactoredInt::from_int(base3).pow(v - 1);
    }
    const auto h_opt = table.lookup(m);
    if (!h_opt)
        return make(Criterion::IdealDecomposition, VerdictStatus::Inconclusive,
                    "class number h_" + std::to_string(normalize_modulus(m)) + " unknown");
    const Int h = *h_opt;
    const unsigned long phi_m = euler_phi(m);
    for (const auto& [q, exp] : w.factors()) {
        if (exp % 2 == 0) continue;
        if (int_gcd(q, Int(m)) != 1) continue;
        const unsigned long e = (exp - 1) / 2;
        // (a) residue degree phi(m)/2, i.e. exactly two primes above q
        if (multiplicative_order(q, m) != phi_m / 2) continue;
        // (b) class number coprimality along the possible splittings
        bool gcd_ok = true;
        for (unsigned long k = 0; k < e && gcd_ok; ++k)
            if (int_gcd(Int(2 * e + 1 - 2 * k), h) != 1) gcd_ok = false;
        if (!gcd_ok) continue;
        // (c) all primes above q non-principal
        std::vector<Assumption> assumptions;
        assumptions.push_back(class_number_assumption(m, h));
        PrincipalityAnswer qa = principality_status(q, m, table, facts);
        if (qa.status != Principality::AllNonPrincipal) continue;
        if (qa.fact) assumptions.push_back(fact_assumption(*qa.fact));
        // (d) all primes above every other prime of w principal
        bool t_ok = true;
        std::ostringstream tdetail;
        for (const auto& [r, rexp] : w.factors()) {
            if (r == q) continue;
            PrincipalityAnswer ra = principality_status(r, m, table, facts);
            if (ra.status != Principality::AllPrincipal) {
                t_ok = false;
                break;
            }
            if (ra.fact) assumptions.push_back(fact_assumption(*ra.fact));
            tdetail << " " << r.str() << " (" << ra.provenance << ")";
            (void)rexp;
        }
        if (!t_ok) continue;
        FactoredInt t = FactoredInt::one();
        for (const auto& [r, rexp] : w.factors())
            if (r != q) t = t * FactoredInt::from_int(r).pow(rexp);
        Verdict out = make(Criterion::IdealDecomposition, VerdictStatus::Excluded, "");
        std::ostringstream os;
        os << "w = " << w.to_string() << "; q = " << q.str() << " with odd exponent " << (2 * e + 1)
           << ", ord_" << m << "(" << q.str() << ") = phi(" << m << ")/2, all primes above q"
           << " non-principal (" << qa.provenance << "); t-part principal:" << tdetail.str();
        out.reason = os.str();
        out.witness = IdealWitness{q, e, std::move(t)};
        out.assumptions = std::move(assumptions);
        return out;
    }
    return make(Criterion::IdealDecomposition, VerdictStatus::Inconclusive,
                "no odd-exponent prime satisfies the decomposition conditions (w = " +
                    w.to_string() + ")");
}

CertifyResult certify(unsigned long v, unsigned long m, const CycInt& gamma, DesignKind kind,
                      const ClassNumberTable& table, const FactStore& facts) {
    if (!gamma.is_real()) throw std::invalid_argument("certify: gamma must be real");
    CertifyResult result;
    result.kind = kind;
    result.v = v;
    result.m = m;
    result.gamma = gamma;
    result.verdicts.push_back(check_gamma_range(v, gamma, kind));
    if (m >= 2) {
        result.verdicts.push_back(lam_leung_check(v, m, gamma, kind));
    } else {
        result.verdicts.push_back(make(Criterion::LamLeung, VerdictStatus::Inconclusive,
                                       "skipped: requires m >= 2"));
    }
    const auto gamma_int = gamma.try_integer();
    const bool below_range = gamma_int && *gamma_int < -1;
    if (!gamma_int) {
        result.verdicts.push_back(make(Criterion::BrockSelfConjugacy, VerdictStatus::Inconclusive,
                                       "skipped: gamma is not a rational integer"));
        result.verdicts.push_back(make(Criterion::IdealDecomposition, VerdictStatus::Inconclusive,
                                       "skipped: gamma is not a rational integer"));
        return result;
    }
    if (below_range) {
        result.verdicts.push_back(make(Criterion::BrockSelfConjugacy, VerdictStatus::Inconclusive,
                                       "skipped: stated for gamma >= -1"));
        result.verdicts.push_back(make(Criterion::IdealDecomposition, VerdictStatus::Inconclusive,
                                       "skipped: stated for gamma >= -1"));
        return result;
    }
    result.verdicts.push_back(brock_check(v, m, *gamma_int, kind));
    if (m >= 3) {
        result.verdicts.push_back(ideal_check(v, m, *gamma_int, kind, table, facts));
    } else {
        result.verdicts.push_back(make(Criterion::IdealDecomposition, VerdictStatus::Inconclusive,
                                       "skipped: requires m >= 3"));
    }
    return result;
}

// --------------------------------------------------------------------------
// Verdict rendering helpers.

std::string Assumption::brief() const {
    std::ostringstream os;
    if (kind == Kind::ClassNumber) {
        os << "h[" << m << "]=" << h.str();
    } else {
        os << (status == Principality::AllNonPrincipal ? "np[" : "pr[") << m << "," << q.str() << "]";
    }
    return os.str();
}

std::string Verdict::witness_brief() const {
    std::ostringstream os;
    if (std::holds_alternative<LamLeungWitness>(witness)) {
        const auto& w = std::get<LamLeungWitness>(witness);
        os << "g=" << w.g << ",target=" << w.target;
    } else if (std::holds_alternative<BrockWitness>(witness)) {
        const auto& w = std::get<BrockWitness>(witness);
        os << "p=" << w.p.str();
    } else if (std::holds_alternative<IdealWitness>(witness)) {
        const auto& w = std::get<IdealWitness>(witness);
        os << "q=" << w.q.str() << ",e=" << w.e;
    } else {
        os << "-";
    }
    return os.str();
}

}  // namespace nbhc
