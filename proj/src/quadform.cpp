#include "nbhc/quadform.hpp"

#include <stdexcept>

namespace nbhc {

std::vector<QuadForm> reduced_forms(const Int& d) {
    if (d >= 0) throw std::invalid_argument("reduced_forms: discriminant must be negative");
    Int r = d % 4;
    if (r < 0) r += 4;
    if (r != 0 && r != 1) throw std::invalid_argument("reduced_forms: d must be 0 or 1 mod 4");
    std::vector<QuadForm> forms;
    // |b| <= a <= sqrt(|d|/3)
    Int amax = isqrt(int_abs(d) / 3);
    for (Int a = 1; a <= amax; ++a) {
        for (Int b = -a; b <= a; ++b) {
            Int num = b * b - d;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if ((b < 0) && (int_abs(b) == a || a == c)) continue;  // reduced tie-break
            if (int_gcd(int_gcd(a, int_abs(b)), c) != 1) continue;  // primitive only
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

std::optional<std::pair<Int, Int>> principal_form_representation(const Int& q, const Int& d) {
    if (d >= 0) throw std::invalid_argument("principal_form_representation: d must be negative");
    Int r = d % 4;
    if (r < 0) r += 4;
    if (r != 1) throw std::invalid_argument("principal_form_representation: d must be 1 mod 4");
    if (q < 0) return std::nullopt;
    // x^2 + xy + ((1-d)/4) y^2 = q  <=>  (2x + y)^2 = 4q + d y^2.
    Int absd = int_abs(d);
    for (Int y = 0; absd * y * y <= 4 * q; ++y) {
        Int sq = 4 * q + d * y * y;
        Int s;
        if (!is_perfect_square(sq, &s)) continue;
        // s = y (mod 2) automatically: s^2 = y^2 (mod 2) since d is odd.
        return std::make_pair((s - y) / 2, y);
    }
    return std::nullopt;
}

}  // namespace nbhc
