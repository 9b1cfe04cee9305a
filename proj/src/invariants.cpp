#include "skein/invariants.hpp"

#include <stdexcept>

#include "skein/recoupling.hpp"

namespace skein {

namespace {

void check_order(int r) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("invariants: r must be odd and at least 3");
}

// Summand of the encirclement expansion as an exact Laurent polynomial:
// (-A)^{i(i+2)} Delta_i times the slide coefficient for an i-coloured
// strand carried past an alpha-cable. The slide coefficient is
// (-1)^{alpha/2} lambda_alpha^{ii}; the sign factor is the orientation
// pinned by the identity checks below (see prop_checks).
LaurentPoly encirclement_term(int i, int alpha) {
    const long twist_exp = static_cast<long>(i) * (i + 2);
    const long slide_exp = twist_exp - static_cast<long>(alpha) * (alpha + 2) / 2;
    int sign = 1;
    if (twist_exp % 2 != 0) sign = -sign;  // (-A)^{i(i+2)}
    if (i % 2 != 0) sign = -sign;          // sign of the pinned slide coefficient
    LaurentPoly term = delta_poly(i).shifted(twist_exp + slide_exp);
    return sign > 0 ? term : -term;
}

}  // namespace

QuantumContext quantum_context(int r) {
    check_order(r);
    QuantumContext ctx(r);
    for (int i = 0; i <= (r - 3) / 2; ++i) ctx.omega_coeffs.push_back(eval_at_root(delta_poly(i), r));
    for (const auto& d : ctx.omega_coeffs) ctx.omega_bracket += d * d;
    ctx.eta_sq = ctx.omega_bracket.inverse();
    long kexp = -6 - static_cast<long>(r) * (r + 1) / 2;
    ctx.kappa6 = CyclotomicNum::zeta_pow(r, kexp);
    return ctx;
}

CyclotomicNum invariant_sum(int r, int c) {
    check_order(r);
    CyclotomicNum total(r);
    switch (c) {
        case 0:
            for (int i = 0; i <= (r - 3) / 2; ++i)
                total += eval_at_root(encirclement_term(i, 0), r);
            return total;
        case 2:
            for (int i = 1; i <= (r - 3) / 2; ++i)
                total += eval_at_root(encirclement_term(i, 2), r);
            return total;
        case 1: {
            // Only the top colour contributes, with the core labelled
            // r-2 surviving the encirclement.
            const int m = (r - 3) / 2;
            LaurentPoly term = encirclement_term(m, r - 3) * delta_poly(r - 2);
            return eval_at_root(term, r);
        }
        default:
            throw std::invalid_argument("invariant_sum: skein label must be 0, 1, or 2");
    }
}

PropCheck prop_checks(int r) {
    check_order(r);
    PropCheck check;
    check.r = r;

    const CyclotomicNum i0 = invariant_sum(r, 0);
    const CyclotomicNum i1 = invariant_sum(r, 1);
    const CyclotomicNum i2 = invariant_sum(r, 2);
    const CyclotomicNum one = CyclotomicNum::from_long(r, 1);

    // (1 - A^4) I(M) = sum_{k=1}^{r-1} (-1)^k A^{2k^2 + 2k}.
    CyclotomicNum lhs = (one - CyclotomicNum::zeta_pow(r, 4)) * i0;
    CyclotomicNum rhs(r);
    for (long k = 1; k <= r - 1; ++k)
        rhs.add_scaled_power(2 * k * k + 2 * k, mpq_class(k % 2 == 0 ? 1 : -1));
    check.gauss_identity = lhs == rhs;

    // A^4 I(M,(0,0,2)) = I(M) - 1.
    check.skein2_identity = CyclotomicNum::zeta_pow(r, 4) * i2 == i0 - one;

    // I(M,(0,0,1)) = (-1)^{(r-1)/2} A^{-2} / (A^2 + 1), cross-multiplied.
    CyclotomicNum closed = CyclotomicNum::zeta_pow(r, -2);
    if (((r - 1) / 2) % 2 != 0) closed = -closed;
    check.skein1_closed_form = i1 * (CyclotomicNum::zeta_pow(r, 2) + one) == closed;

    check.skein1_nonzero = !i1.is_zero();
    return check;
}

}  // namespace skein
