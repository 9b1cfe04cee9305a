#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "skein/bigfloat.hpp"
#include "skein/laurent.hpp"
#include "skein/ratfn.hpp"

namespace skein {

/// Exact element of Q(zeta_{2r}) for odd r >= 3, represented by a
/// rational-coefficient polynomial in zeta_{2r} reduced modulo the
/// 2r-th cyclotomic polynomial (degree phi(r)).
class CyclotomicNum {
public:
    explicit CyclotomicNum(int r);  // zero

    static CyclotomicNum from_rational(int r, const mpq_class& value);
    static CyclotomicNum from_long(int r, long value);
    /// zeta_{2r}^k, any integer k.
    static CyclotomicNum zeta_pow(int r, long k);

    int order_r() const { return r_; }
    /// Coefficient vector of length phi(r) (dense, low degree first).
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    CyclotomicNum operator-() const;
    CyclotomicNum operator+(const CyclotomicNum& o) const;
    CyclotomicNum operator-(const CyclotomicNum& o) const;
    CyclotomicNum operator*(const CyclotomicNum& o) const;
    CyclotomicNum& operator+=(const CyclotomicNum& o) { return *this = *this + o; }
    CyclotomicNum& operator-=(const CyclotomicNum& o) { return *this = *this - o; }
    CyclotomicNum& operator*=(const CyclotomicNum& o) { return *this = *this * o; }

    /// *this += scale * zeta^k (scalar accumulation, no field multiply).
    void add_scaled_power(long k, const mpq_class& scale);

    /// Field inverse by the extended Euclidean algorithm against the
    /// modulus. Throws on zero.
    CyclotomicNum inverse() const;
    CyclotomicNum operator/(const CyclotomicNum& o) const { return *this * o.inverse(); }

    bool operator==(const CyclotomicNum& o) const;
    bool operator!=(const CyclotomicNum& o) const { return !(*this == o); }

    /// Numerical embedding at zeta_{2r} = e^{i pi / r}.
    Complex embed(mpfr_prec_t precision_bits) const;

    std::string to_string() const;

private:
    int r_;
    std::vector<mpq_class> coeffs_;
};

/// Evaluates a Laurent polynomial at zeta_{2r} (exponents mod 2r).
CyclotomicNum eval_at_root(const LaurentPoly& p, int r);

/// Evaluates a rational function at zeta_{2r}. The stored form is
/// normalized (numerator and denominator coprime), so a vanishing
/// denominator is a genuine pole and raises PoleError.
CyclotomicNum eval_at_root(const RationalFn& f, int r);

}  // namespace skein
