#include "nbhc/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace nbhc {

void CycPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

CycPoly CycPoly::constant(Int a) {
    CycPoly p;
    if (a != 0) p.c_.push_back(std::move(a));
    return p;
}

CycPoly CycPoly::monomial(std::size_t k, Int a) {
    CycPoly p;
    if (a != 0) {
        p.c_.assign(k + 1, Int(0));
        p.c_[k] = std::move(a);
    }
    return p;
}

CycPoly CycPoly::x_pow_minus_one(std::size_t n) {
    CycPoly p;
    p.c_.assign(n + 1, Int(0));
    p.c_[0] = -1;
    p.c_[n] = 1;
    return p;
}

const Int& CycPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

CycPoly CycPoly::operator+(const CycPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return CycPoly(std::move(r));
}

CycPoly CycPoly::operator-(const CycPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return CycPoly(std::move(r));
}

CycPoly CycPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& x : r) x = -x;
    return CycPoly(std::move(r));
}

CycPoly CycPoly::operator*(const CycPoly& o) const {
    if (is_zero() || o.is_zero()) return CycPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return CycPoly(std::move(r));
}

std::pair<CycPoly, CycPoly> CycPoly::divmod_monic(const CycPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (divisor.leading() != 1) throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<Int> rem(c_);
    const auto dd = static_cast<std::size_t>(divisor.degree());
    if (rem.size() <= dd) return {CycPoly(), *this};
    std::vector<Int> quot(rem.size() - dd, Int(0));
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        Int q = rem[i];
        quot[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
    }
    return {CycPoly(std::move(quot)), CycPoly(std::move(rem))};
}

CycPoly CycPoly::divide_exact(const CycPoly& divisor) const {
    auto [q, r] = divmod_monic(divisor);
    if (!r.is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
    return q;
}

Int CycPoly::eval(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::string CycPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = int_abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace nbhc
