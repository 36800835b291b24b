#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "nbhc/criteria.hpp"
#include "nbhc/designs.hpp"

namespace nbhc {

class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("search budget exceeded: " + std::to_string(required) +
                             " candidates required, budget " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}
    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

  private:
    std::uint64_t required_, budget_;
};

struct SearchHit {
    CycInt gamma;                                    // real; 0 encodes Perfect
    std::vector<SequenceSpec::Entry> first_row;      // lexicographically smallest witness
    double gamma_abs = 0.0;                          // |gamma| under the standard embedding
};

struct SearchResult {
    unsigned long v = 0;
    unsigned long m = 0;
    DesignKind kind = DesignKind::NearButsonHadamard;
    std::uint64_t candidates = 0;  // first rows examined
    // sorted by real embedding of gamma, ties by coefficient vector
    std::vector<SearchHit> hits;

    std::vector<CycInt> gamma_set() const;
};

constexpr std::uint64_t kDefaultSearchBudget = 2'000'000;

// Enumerates every circulant first row (all of E_m^v for BH; zero first
// entry, then E_m^(v-1) for conference), classifies the circulant, and
// collects the distinct gamma values with one witness each.  Iteration is
// lexicographic in the exponent vector; the recorded witness is therefore
// the smallest row realizing its gamma.  Workers partition the index space
// into contiguous blocks; the merge keeps the smallest witness, so results
// do not depend on the worker count.  Every hit is re-checked through
// gram_type on the witness matrix before the result is returned.
// Throws BudgetExceeded when the row space is larger than `budget`.
//
// symmetry_reduction (off by default) shrinks the space without changing the
// gamma set: autocorrelations are invariant under scaling the row by a fixed
// root of unity and under rotating it, so for BH the first entry is pinned
// to 1 and only rows lexicographically minimal among their 1-leading
// rotations are classified; for conference the entry after the zero is
// pinned to 1.  Witness rows then come from the reduced space.
SearchResult search_circulant(unsigned long v, unsigned long m, DesignKind kind,
                              std::uint64_t budget = kDefaultSearchBudget, unsigned workers = 1,
                              bool symmetry_reduction = false);

struct CrossValidationEntry {
    unsigned long v, m;
    DesignKind kind;
    CycInt gamma;
    Criterion criterion;  // the criterion that wrongly excluded
};

struct CrossValidationReport {
    unsigned long cells = 0;          // (v, m, kind) combinations searched
    unsigned long gammas_checked = 0;
    std::vector<CrossValidationEntry> contradictions;  // FATAL soundness failures
};

// For every m in m_set, v <= v_max and both kinds: every gamma realized by an
// exhaustive circulant search must come back Inconclusive from certify.  Any
// exclusion of a witnessed design is a soundness failure and is reported.
CrossValidationReport cross_validate(unsigned long v_max, const std::set<unsigned long>& m_set,
                                     const ClassNumberTable& table, const FactStore& facts,
                                     std::uint64_t budget = kDefaultSearchBudget);

}  // namespace nbhc
