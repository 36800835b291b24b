#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nbhc/cyclotomic.hpp"
#include "nbhc/numtheory.hpp"
#include "nbhc/verdict.hpp"

namespace nbhc {

// Period-v sequence with entries in E_m = {1, zeta, ..., zeta^(m-1)}, stored
// as exponents so literals round-trip losslessly; nullopt marks the zero
// entry of an almost sequence (position 0 only).
class SequenceSpec {
  public:
    using Entry = std::optional<unsigned>;  // exponent of zeta_m, or zero entry

    // Throws std::invalid_argument unless `almost` matches the zero pattern:
    // almost sequences have exactly entries[0] == nullopt, plain ones none.
    SequenceSpec(unsigned m, std::vector<Entry> entries, bool almost);

    static SequenceSpec m_ary(unsigned m, std::vector<unsigned> exponents);
    // entries[0] is the zero entry; exponents fill positions 1..v-1.
    static SequenceSpec almost_m_ary(unsigned m, std::vector<unsigned> exponents_tail);

    unsigned modulus() const { return m_; }
    unsigned long period() const { return entries_.size(); }
    bool almost() const { return almost_; }
    const std::vector<Entry>& entries() const { return entries_; }

    CycInt value_at(unsigned long i) const;  // zeta^e or 0, index mod v

  private:
    unsigned m_;
    bool almost_;
    std::vector<Entry> entries_;
};

// C(t) = sum_i a_i * conj(a_{i+t}), indices mod v; exact in Z[zeta_m].
CycInt autocorrelation(const SequenceSpec& seq, unsigned long t);

enum class SeqClass { Perfect, NearlyPerfect, Neither };

struct Classification {
    SeqClass cls = SeqClass::Neither;
    // 0 for Perfect; the common real off-peak value for NearlyPerfect;
    // nullopt for Neither.
    std::optional<CycInt> gamma;
};

// Perfect: all off-peak autocorrelations zero.  NearlyPerfect: all equal to a
// common real gamma != 0.  Period-1 sequences are Perfect by convention
// (the off-peak range is empty).
Classification classify(const SequenceSpec& seq);

// v x v matrix over Z[zeta_m]; entries are expected to be roots of unity or
// zero (gram_type validates).
struct DesignMatrix {
    unsigned v = 0;
    unsigned m = 1;
    std::vector<CycInt> entries;  // row-major

    const CycInt& at(unsigned long i, unsigned long j) const { return entries[i * v + j]; }
    CycInt& at(unsigned long i, unsigned long j) { return entries[i * v + j]; }
};

// Row i is the cyclic right-shift of the first row by i:
// H[i][j] = a_((j - i) mod v), so the Gram entry (i, k) is C((i - k) mod v).
DesignMatrix circulant_from_sequence(const SequenceSpec& seq);

struct GramType {
    DesignKind kind = DesignKind::NearButsonHadamard;
    CycInt gamma;
};

// Recognizes M as a near Butson-Hadamard matrix (no zero entries, Gram
// (v-gamma)I + gamma*J) or near conference matrix (exactly the diagonal
// zero, Gram (v-1-gamma)I + gamma*J) with real gamma read off the Gram
// matrix; nullopt if neither.  Throws if entries are not roots of unity or
// zero.  For v = 1 the convention is gamma = 0.
std::optional<GramType> gram_type(const DesignMatrix& M);

// det(Gram) in factored form: ((gamma+1)v - gamma)(v - gamma)^(v-1) for BH,
// (gamma+1)(v-1)(v-1-gamma)^(v-1) for conference.
FactoredInt gram_det_factored(unsigned long v, const Int& gamma, DesignKind kind);

// Sequence file format (used by the CLI `verify` subcommand):
//   # comment
//   m 5
//   v 4
//   almost 0          (optional; derived from the entries when absent)
//   entries 0 1 2 3   (v tokens; exponent in [0, m) or Z for the zero entry)
// Keys may appear in any order; `entries` must come with m and v already set.
SequenceSpec parse_sequence(std::istream& in);
SequenceSpec parse_sequence_file(const std::string& path);

}  // namespace nbhc
