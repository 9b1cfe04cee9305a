#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <string>
#include <utility>

namespace skein {

/// Thin RAII wrapper over an mpfr_t. Every operation rounds to nearest
/// (MPFR_RNDN) at the precision of the result, which is the larger of
/// the operand precisions.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(const mpz_class& x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    Real(const mpq_class& x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    Real operator+(const Real& o) const { Real r(join(o)); mpfr_add(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator-(const Real& o) const { Real r(join(o)); mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator*(const Real& o) const { Real r(join(o)); mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real operator/(const Real& o) const { Real r(join(o)); mpfr_div(r.v_, v_, o.v_, MPFR_RNDN); return r; }
    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    bool operator<(const Real& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator<=(const Real& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator>(const Real& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator>=(const Real& o) const { return mpfr_cmp(v_, o.v_) >= 0; }

    static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    friend Real abs(const Real& x) { Real r(x.prec()); mpfr_abs(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real sqrt(const Real& x) { Real r(x.prec()); mpfr_sqrt(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real sin(const Real& x) { Real r(x.prec()); mpfr_sin(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real cos(const Real& x) { Real r(x.prec()); mpfr_cos(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real asin(const Real& x) { Real r(x.prec()); mpfr_asin(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real atan(const Real& x) { Real r(x.prec()); mpfr_atan(r.v_, x.v_, MPFR_RNDN); return r; }
    friend Real atan2(const Real& y, const Real& x) {
        Real r(y.join(x));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }

private:
    mpfr_prec_t join(const Real& o) const { return std::max(prec(), o.prec()); }

    mpfr_t v_;
};

/// Complex number over Real, precision carried by the parts.
class Complex {
public:
    explicit Complex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }

    /// e^{i*angle}
    static Complex unit(const Real& angle) { return Complex(cos(angle), sin(angle)); }

    Complex operator-() const { return Complex(-re_, -im_); }
    Complex operator+(const Complex& o) const { return Complex(re_ + o.re_, im_ + o.im_); }
    Complex operator-(const Complex& o) const { return Complex(re_ - o.re_, im_ - o.im_); }
    Complex operator*(const Complex& o) const {
        return Complex(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Complex operator/(const Complex& o) const {
        Real d = o.re_ * o.re_ + o.im_ * o.im_;
        return Complex((re_ * o.re_ + im_ * o.im_) / d, (im_ * o.re_ - re_ * o.im_) / d);
    }
    Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    Complex operator*(const Real& s) const { return Complex(re_ * s, im_ * s); }
    Complex operator/(const Real& s) const { return Complex(re_ / s, im_ / s); }

    Real abs() const { return sqrt(re_ * re_ + im_ * im_); }
    std::string to_string(int digits = 20) const {
        Real mag = im_.sign() < 0 ? -im_ : im_;
        return re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") + mag.to_string(digits) + "i";
    }

private:
    Real re_;
    Real im_;
};

}  // namespace skein
