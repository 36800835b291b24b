#pragma once

#include "nbhc/classdata.hpp"
#include "nbhc/cyclotomic.hpp"
#include "nbhc/verdict.hpp"

namespace nbhc {

// The Gram determinant ((gamma+1)v - gamma)(v - gamma)^(v-1) for BH resp.
// (gamma+1)(v-1)(v-1-gamma)^(v-1) for conference equals |det|^2 of the
// matrix, so parameters making it negative are excluded outright.  That is
// exactly gamma < -v/(v-1) for BH (the blanket bound gamma < -1 is its
// v -> infinity limit, and is wrong at v = 2: a BH_-2(2,2) exists) and
// gamma < -1 for conference.  The sign is decided exactly.
// Requires gamma real, v >= 1.
Verdict check_gamma_range(unsigned long v, const CycInt& gamma, DesignKind kind);

// Vanishing-sums criterion: if -gamma is a sum of g m-th roots of unity, a
// matrix forces a vanishing sum of v+g (BH) resp. v-2+g (conference) m-th
// roots, whose size must lie in the numerical semigroup generated by the
// primes of m.  Excluded if any valid candidate g fails; every candidate is a
// genuine representation, so exclusion through a single one is sound.
// Requires m >= 2, gamma real, v >= 1.
Verdict lam_leung_check(unsigned long v, unsigned long m, const CycInt& gamma, DesignKind kind);

// Self-conjugacy criterion on w1/w2 (parity-split forms): excluded when some
// prime p coprime to m divides the square-free part of w and is
// self-conjugate modulo m.  Primes dividing m are skipped.  Requires integer
// gamma >= -1.
Verdict brock_check(unsigned long v, unsigned long m, const Int& gamma, DesignKind kind);

// Prime-ideal-decomposition criterion on the Gram determinant
// w = ((gamma+1)v - gamma)(v - gamma)^(v-1)   (BH)
// w = (gamma+1)(v-1)(v-1-gamma)^(v-1)         (conference):
// excluded when some q | w appears to odd exponent 2e+1 with
//   (a) ord_m(q) = phi(m)/2,
//   (b) gcd(2e+1-2k, h_m) = 1 for 0 <= k <= e-1,
//   (c) every prime ideal above q non-principal, and
//   (d) every prime ideal above each other prime of w principal.
// w never gets expanded; all logic runs on the factored form.  Requires
// integer gamma >= -1 and m >= 3; Inconclusive when h_m is unknown.
Verdict ideal_check(unsigned long v, unsigned long m, const Int& gamma, DesignKind kind,
                    const ClassNumberTable& table, const FactStore& facts);

// Runs all four criteria in order (cheapest first, no short-circuit).
// Criteria whose preconditions fail for these parameters (non-integer gamma,
// gamma < -1, small m) appear as Inconclusive with the skip reason.
// Requires gamma real.
CertifyResult certify(unsigned long v, unsigned long m, const CycInt& gamma, DesignKind kind,
                      const ClassNumberTable& table, const FactStore& facts);

}  // namespace nbhc
