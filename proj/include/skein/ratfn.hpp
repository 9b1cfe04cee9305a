#pragma once

#include <string>

#include "skein/laurent.hpp"

namespace skein {

/// Normalized quotient of two Laurent polynomials. The denominator is an
/// ordinary polynomial with nonzero constant term and positive leading
/// coefficient (monomial units are absorbed into the numerator), and the
/// two parts share no common factor. Equality of values is therefore
/// structural equality.
class RationalFn {
public:
    RationalFn() : num_(), den_(LaurentPoly::one()) {}
    explicit RationalFn(long constant) : num_(constant), den_(LaurentPoly::one()) {}
    explicit RationalFn(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
    RationalFn(LaurentPoly num, LaurentPoly den);

    static RationalFn zero() { return RationalFn(); }
    static RationalFn one() { return RationalFn(1); }

    /// Trusted constructor for parts already in canonical form: coprime,
    /// denominator an ordinary polynomial with nonzero constant term and
    /// positive leading coefficient. Skips the normalization pass.
    static RationalFn from_canonical_parts(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFn operator-() const;
    RationalFn operator+(const RationalFn& rhs) const;
    RationalFn operator-(const RationalFn& rhs) const;
    RationalFn operator*(const RationalFn& rhs) const;
    RationalFn operator/(const RationalFn& rhs) const;
    RationalFn& operator+=(const RationalFn& rhs) { return *this = *this + rhs; }
    RationalFn& operator-=(const RationalFn& rhs) { return *this = *this - rhs; }
    RationalFn& operator*=(const RationalFn& rhs) { return *this = *this * rhs; }
    RationalFn& operator/=(const RationalFn& rhs) { return *this = *this / rhs; }

    RationalFn inverse() const;
    /// Integer power; negative exponents invert first.
    RationalFn pow(long e) const;
    /// The involution A -> A^{-1}, applied to numerator and denominator.
    RationalFn bar() const;

    /// Exact equality decided by cross-multiplication.
    bool operator==(const RationalFn& rhs) const;
    bool operator!=(const RationalFn& rhs) const { return !(*this == rhs); }
    /// Structural order for map keys.
    bool operator<(const RationalFn& rhs) const;

    std::string to_string() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

RationalFn operator*(const LaurentPoly& p, const RationalFn& f);

}  // namespace skein
