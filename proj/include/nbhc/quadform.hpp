#pragma once

#include <optional>
#include <vector>

#include "nbhc/bigint.hpp"

namespace nbhc {

// Binary quadratic forms a*x^2 + b*x*y + c*y^2 of negative fundamental
// discriminant, used as an exact class-group oracle for the imaginary
// quadratic subfield of a prime cyclotomic field.

struct QuadForm {
    Int a, b, c;
};

// All reduced primitive forms of discriminant d < 0 (|b| <= a <= c, and
// b >= 0 when |b| == a or a == c).  Their count is the class number h(d).
std::vector<QuadForm> reduced_forms(const Int& d);

inline unsigned long quad_class_number(const Int& d) {
    return static_cast<unsigned long>(reduced_forms(d).size());
}

// Representation q = x^2 + x*y + ((1-d)/4)*y^2 by the principal form of
// discriminant d = 1 (mod 4), d < 0; exhaustive over the finitely many y
// with 4q - |d| y^2 >= 0.  Returns a witness (x, y) or nullopt.
std::optional<std::pair<Int, Int>> principal_form_representation(const Int& q, const Int& d);

}  // namespace nbhc
