#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nbhc/bigint.hpp"
#include "nbhc/classdata.hpp"
#include "nbhc/cyclotomic.hpp"
#include "nbhc/numtheory.hpp"

namespace nbhc {

enum class DesignKind { NearButsonHadamard, NearConference };

inline std::string to_string(DesignKind k) {
    return k == DesignKind::NearButsonHadamard ? "bh" : "conf";
}

enum class Criterion { GammaRange, LamLeung, BrockSelfConjugacy, IdealDecomposition };

inline std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::GammaRange: return "gamma-range";
        case Criterion::LamLeung: return "lam-leung";
        case Criterion::BrockSelfConjugacy: return "brock";
        default: return "ideal";
    }
}

enum class VerdictStatus { Excluded, Inconclusive };

struct LamLeungWitness {
    unsigned long g = 0;       // the representation size that fails
    unsigned long target = 0;  // v + g resp. v - 2 + g
    std::set<unsigned long> primes;
};

struct BrockWitness {
    Int p;  // self-conjugate prime dividing the square-free part
    Int w;
};

struct IdealWitness {
    Int q;
    unsigned long e = 0;
    FactoredInt t;
};

using Witness = std::variant<std::monostate, LamLeungWitness, BrockWitness, IdealWitness>;

// One class-number entry or principality fact a verdict relies on.
struct Assumption {
    enum class Kind { ClassNumber, Principality };
    Kind kind = Kind::ClassNumber;
    unsigned long m = 0;  // normalized modulus
    Int h;                // ClassNumber only
    Int q;                // Principality only
    Principality status = Principality::Unknown;
    std::string provenance;

    std::string brief() const;  // compact token, e.g. "h[23]=3" or "np[23,73]"
};

struct Verdict {
    Criterion criterion = Criterion::GammaRange;
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::string reason;  // human detail; for Inconclusive, why
    Witness witness;
    std::vector<Assumption> assumptions;

    bool excluded() const { return status == VerdictStatus::Excluded; }
    std::string witness_brief() const;  // e.g. "p=5", "q=73,e=0", "g=4,target=8"
};

struct CertifyResult {
    DesignKind kind = DesignKind::NearButsonHadamard;
    unsigned long v = 0;
    unsigned long m = 0;
    CycInt gamma;
    std::vector<Verdict> verdicts;

    bool excluded() const {
        for (const auto& w : verdicts)
            if (w.excluded()) return true;
        return false;
    }
    const Verdict* first_excluding() const {
        for (const auto& w : verdicts)
            if (w.excluded()) return &w;
        return nullptr;
    }
};

}  // namespace nbhc
