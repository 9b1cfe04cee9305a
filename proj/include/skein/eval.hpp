#pragma once

#include "skein/bigfloat.hpp"
#include "skein/laurent.hpp"
#include "skein/ratfn.hpp"

namespace skein {

/// Horner evaluation of a Laurent polynomial at a nonzero complex point,
/// with every operation rounded to nearest at precision_bits.
Complex eval_complex(const LaurentPoly& p, const Complex& z, mpfr_prec_t precision_bits);

/// Evaluates num(z)/den(z). If the denominator's magnitude falls below
/// 2^{-precision_bits/2} the point is treated as a pole and PoleError is
/// thrown rather than returning a garbage quotient.
Complex eval_complex(const RationalFn& f, const Complex& z, mpfr_prec_t precision_bits);

}  // namespace skein
