#include "skein/ratfn.hpp"

#include <stdexcept>
#include <utility>

namespace skein {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn: division by the zero function");
    normalize();
}

RationalFn RationalFn::from_canonical_parts(LaurentPoly num, LaurentPoly den) {
    RationalFn f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    if (f.num_.is_zero()) f.den_ = LaurentPoly::one();
    return f;
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // Absorb the denominator's monomial unit A^k into the numerator.
    const long dlow = den_.low_exp();
    if (dlow != 0) {
        den_.shift(-dlow);
        num_.shift(-dlow);
    }
    if (!den_.is_one()) {
        if (den_.is_constant()) {
            mpz_class d = den_.coeff(0);
            mpz_class g = num_.content();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            if (g != 1) {
                LaurentPoly reduced;
                for (const auto& [e, c] : num_.terms())
                    reduced += LaurentPoly::monomial(c / g, e);
                num_ = reduced;
                d /= g;
            }
            den_ = LaurentPoly(d);
        } else {
            LaurentPoly g = laurent_gcd(num_, den_);
            if (!g.is_one()) {
                num_ = *num_.divided_exactly_by(g);
                den_ = *den_.divided_exactly_by(g);
            }
            const long dlow2 = den_.low_exp();
            if (dlow2 != 0) {
                den_.shift(-dlow2);
                num_.shift(-dlow2);
            }
        }
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFn RationalFn::operator+(const RationalFn& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    if (den_ == rhs.den_) return RationalFn(num_ + rhs.num_, den_);
    LaurentPoly g = laurent_gcd(den_, rhs.den_);
    if (g.is_one()) return RationalFn(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    LaurentPoly d1 = *den_.divided_exactly_by(g);
    LaurentPoly d2 = *rhs.den_.divided_exactly_by(g);
    return RationalFn(num_ * d2 + rhs.num_ * d1, d1 * rhs.den_);
}

RationalFn RationalFn::operator-(const RationalFn& rhs) const {
    return *this + (-rhs);
}

RationalFn RationalFn::operator*(const RationalFn& rhs) const {
    if (is_zero() || rhs.is_zero()) return RationalFn();
    // Cross-cancel before multiplying to keep the closing gcd small.
    LaurentPoly n1 = num_, d2 = rhs.den_;
    LaurentPoly g1 = laurent_gcd(n1, d2);
    if (!g1.is_one()) {
        n1 = *n1.divided_exactly_by(g1);
        d2 = *d2.divided_exactly_by(g1);
    }
    LaurentPoly n2 = rhs.num_, d1 = den_;
    LaurentPoly g2 = laurent_gcd(n2, d1);
    if (!g2.is_one()) {
        n2 = *n2.divided_exactly_by(g2);
        d1 = *d1.divided_exactly_by(g2);
    }
    return RationalFn(n1 * n2, d1 * d2);
}

RationalFn RationalFn::operator/(const RationalFn& rhs) const {
    return *this * rhs.inverse();
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFn: division by the zero function");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFn result = one();
    RationalFn base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

RationalFn RationalFn::bar() const {
    return RationalFn(num_.bar(), den_.bar());
}

bool RationalFn::operator==(const RationalFn& rhs) const {
    return num_ * rhs.den_ == rhs.num_ * den_;
}

bool RationalFn::operator<(const RationalFn& rhs) const {
    if (num_ != rhs.num_) return num_ < rhs.num_;
    return den_ < rhs.den_;
}

std::string RationalFn::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFn operator*(const LaurentPoly& p, const RationalFn& f) {
    return RationalFn(p) * f;
}

}  // namespace skein
