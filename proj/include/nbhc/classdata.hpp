#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nbhc/bigint.hpp"
#include "nbhc/cyclotomic.hpp"

namespace nbhc {

// Q(zeta_m) = Q(zeta_{m/2}) for odd m/2; class numbers and principality
// facts are keyed on this normal form.
inline unsigned long normalize_modulus(unsigned long m) {
    return (m % 4 == 2) ? m / 2 : m;
}

// Class numbers h_m of Q(zeta_m).  Ships with the standard table for
// m <= 70; larger moduli come from user extension files.
class ClassNumberTable {
  public:
    // The built-in table (all 70 entries, source tag "builtin").
    static const ClassNumberTable& builtin();

    // Extension file: one "m h_m # source" per line ('#' starts a comment).
    // New moduli only; conflicts with existing entries are load errors.
    void load_extension_file(const std::string& path);

    std::optional<Int> lookup(unsigned long m) const;

    struct Entry {
        unsigned long m;
        Int h;
        std::string source;
    };
    std::vector<Entry> entries_sorted() const;
    // Canonical dump, one "m h_m # source" line per entry.
    std::string render() const;

  private:
    std::map<unsigned long, Entry> entries_;
};

struct SplittingInfo {
    Int q;
    unsigned long m = 0;
    bool ramified = false;     // gcd(q, m) > 1
    unsigned long f = 0;       // residue degree ord_m(q), unramified only
    unsigned long g = 0;       // number of primes above q, = phi(m)/f
};

// Splitting of an unramified rational prime in Q(zeta_m), from
// f = ord_m(q), g = phi(m)/f.  m >= 3.  When gcd(q, m) > 1 only the ramified
// flag is meaningful.
SplittingInfo splitting_pattern(const Int& q, unsigned long m);

enum class Principality { AllPrincipal, AllNonPrincipal, Unknown };

std::string to_string(Principality p);

struct PrincipalityFact {
    unsigned long m = 0;  // normalized modulus
    Int q;
    Principality status = Principality::Unknown;
    std::string provenance;
};

// Externally sourced principality assertions, keyed on (normalized m, q).
class FactStore {
  public:
    FactStore() = default;

    // Facts file: one "m q principal|nonprincipal # provenance" per line.
    // Duplicate (normalized m, q) keys are a load error.
    static FactStore load_file(const std::string& path);
    void add(PrincipalityFact fact);  // throws on duplicate key

    const PrincipalityFact* find(unsigned long m, const Int& q) const;
    std::vector<PrincipalityFact> all() const;
    std::size_t size() const { return facts_.size(); }

  private:
    std::map<std::pair<unsigned long, Int>, PrincipalityFact> facts_;
};

struct PrincipalityAnswer {
    Principality status = Principality::Unknown;
    std::string provenance;                  // which rule or fact decided it
    const PrincipalityFact* fact = nullptr;  // set when a stored fact was used
};

// Decides whether all prime ideals above q in Z[zeta_m] are principal.
// Rule order: h_m = 1; inert (the ideal is (q) itself); the ramified prime
// of a prime-power modulus (generated by 1 - zeta); stored facts; Unknown.
// m >= 3.
PrincipalityAnswer principality_status(const Int& q, unsigned long m,
                                       const ClassNumberTable& table, const FactStore& facts);

struct GeneratorSearchResult {
    std::optional<CycInt> witness;   // |field_norm| = q^f, re-verified exactly
    std::uint64_t candidates = 0;
    bool exhausted = true;           // false when the candidate cap cut the search short
};

// Best-effort search for a generator of a prime above q: coefficient vectors
// in [-coeff_bound, coeff_bound]^phi(m) with |norm| = q^ord_m(q).  A hit is a
// sound principality certificate; an empty result proves nothing.
// Requires gcd(q, m) = 1.
GeneratorSearchResult find_generator(const Int& q, unsigned long m, long coeff_bound,
                                     std::uint64_t max_candidates = 100'000'000);

}  // namespace nbhc
