#include "skein/eval.hpp"

#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

Complex eval_complex(const LaurentPoly& p, const Complex& z, mpfr_prec_t precision_bits) {
    if (precision_bits < 53) throw std::invalid_argument("eval_complex: precision below 53 bits");
    if (p.is_zero()) return Complex(precision_bits);
    // Horner on A^{-low} * p, then multiply by z^{low}.
    const long low = p.low_exp();
    const long deg = p.degree();
    Complex acc(precision_bits);
    for (long e = deg; e >= low; --e) {
        acc *= z;
        mpz_class c = p.coeff(e);
        if (c != 0) acc += Complex(Real(c, precision_bits), Real(precision_bits));
    }
    // acc == p(z) * z^{-low}; undo the monomial factor.
    if (low != 0) {
        Complex zp(Real(1L, precision_bits), Real(precision_bits));
        Complex base = z;
        long e = low;
        if (e < 0) {
            base = Complex(Real(1L, precision_bits), Real(precision_bits)) / z;
            e = -e;
        }
        while (e > 0) {
            if (e & 1) zp *= base;
            base *= base;
            e >>= 1;
        }
        acc *= zp;
    }
    return acc;
}

Complex eval_complex(const RationalFn& f, const Complex& z, mpfr_prec_t precision_bits) {
    if (precision_bits < 53) throw std::invalid_argument("eval_complex: precision below 53 bits");
    if (z.abs().is_zero()) throw PoleError("eval_complex: evaluation at zero");
    Complex den = eval_complex(f.den(), z, precision_bits);
    if (den.abs() < Real::pow2(-(precision_bits / 2), precision_bits))
        throw PoleError("eval_complex: denominator vanishes at the evaluation point");
    Complex num = eval_complex(f.num(), z, precision_bits);
    return num / den;
}

}  // namespace skein
