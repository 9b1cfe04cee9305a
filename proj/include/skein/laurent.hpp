#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace skein {

/// Integer-coefficient Laurent polynomial in the variable A, kept in
/// canonical sparse form: no zero coefficients are ever stored, so two
/// values are equal iff their term maps are identical.
class LaurentPoly {
public:
    using ExpType = long;
    using TermMap = std::map<ExpType, mpz_class>;

    LaurentPoly() = default;
    explicit LaurentPoly(long constant);
    explicit LaurentPoly(const mpz_class& constant);

    /// coeff * A^exp
    static LaurentPoly monomial(const mpz_class& coeff, ExpType exp);
    static LaurentPoly variable() { return monomial(1, 1); }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    /// Exponent range. Both require a nonzero polynomial.
    ExpType degree() const;
    ExpType low_exp() const;
    ExpType span() const { return is_zero() ? 0 : degree() - low_exp(); }

    const mpz_class& leading_coeff() const;
    mpz_class coeff(ExpType exp) const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return terms_ != rhs.terms_; }
    /// Total order for use as a map key (lexicographic on the term map).
    bool operator<(const LaurentPoly& rhs) const;

    /// Nonnegative integer power.
    LaurentPoly pow(unsigned long e) const;

    /// The involution A -> A^{-1}: negates every exponent.
    LaurentPoly bar() const;

    /// Multiply by coeff * A^exp in place.
    void shift(ExpType exp);
    LaurentPoly shifted(ExpType exp) const;

    /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
    mpz_class content() const;

    /// Exact division: returns quotient iff rhs divides *this exactly.
    std::optional<LaurentPoly> divided_exactly_by(const LaurentPoly& rhs) const;

    /// Canonical text form: terms sorted by ascending exponent, each
    /// written "coeff*A^exp", joined by " + "; "0" for the zero value.
    std::string to_string() const;
    static LaurentPoly from_string(const std::string& text);

private:
    void add_term(ExpType exp, const mpz_class& coeff);

    TermMap terms_;
};

LaurentPoly operator*(const mpz_class& scalar, const LaurentPoly& p);

/// gcd over Z[A] of the "ordinary polynomial" parts, up to sign and a
/// power of A: both arguments are shifted to have nonzero constant term
/// before the subresultant remainder sequence runs. The result has a
/// nonzero constant term and positive leading coefficient.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace skein
