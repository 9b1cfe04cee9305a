#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skein/errors.hpp"
#include "skein/eval.hpp"
#include "skein/invariants.hpp"
#include "skein/recoupling.hpp"

using namespace skein;

namespace {

LaurentPoly mono(long c, long e) {
    return LaurentPoly::monomial(c, e);
}

}  // namespace

TEST_CASE("evaluation at roots of unity") {
    // A^{2r} evaluates to 1.
    for (int r : {3, 5, 9}) {
        CHECK(eval_at_root(LaurentPoly::monomial(1, 2 * r), r) == CyclotomicNum::from_long(r, 1));
        // [r] vanishes at A_r.
        CHECK(eval_at_root(quantum_int(r), r).is_zero());
    }

    // 1/(A^2+1) at r = 3: multiply back and compare.
    const RationalFn f(LaurentPoly(1), mono(1, 2) + LaurentPoly(1));
    const CyclotomicNum v = eval_at_root(f, 3);
    const CyclotomicNum denom = CyclotomicNum::zeta_pow(3, 2) + CyclotomicNum::from_long(3, 1);
    CHECK(v * denom == CyclotomicNum::from_long(3, 1));

    // A genuine pole raises.
    const RationalFn pole(LaurentPoly(1), LaurentPoly(skein::cyclotomic(6)));
    CHECK_THROWS_AS((void)eval_at_root(pole, 3), PoleError);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<long> expo(-7, 7);
    auto random_poly = [&] {
        LaurentPoly p;
        for (int t = 0; t < 5; ++t) p += mono(coeff(rng), expo(rng));
        return p;
    };
    for (int r : {3, 7, 15}) {
        for (int trial = 0; trial < 25; ++trial) {
            const LaurentPoly p = random_poly(), q = random_poly();
            CHECK(eval_at_root(p * q, r) == eval_at_root(p, r) * eval_at_root(q, r));
            CHECK(eval_at_root(p + q, r) == eval_at_root(p, r) + eval_at_root(q, r));
        }
    }
}

TEST_CASE("field inverses round-trip") {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int r : {3, 5, 21}) {
        const CyclotomicNum one = CyclotomicNum::from_long(r, 1);
        for (int trial = 0; trial < 20; ++trial) {
            CyclotomicNum x(r);
            for (int k = 0; k < 4; ++k)
                x.add_scaled_power(k, mpq_class(coeff(rng)));
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == one);
        }
        CHECK_THROWS_AS((void)CyclotomicNum(r).inverse(), std::domain_error);
    }
}

TEST_CASE("quantum context") {
    const QuantumContext c3 = quantum_context(3);
    CHECK(c3.omega_bracket == CyclotomicNum::from_long(3, 1));
    CHECK(c3.eta_sq == CyclotomicNum::from_long(3, 1));

    const QuantumContext c5 = quantum_context(5);
    const CyclotomicNum d1 = eval_at_root(delta_poly(1), 5);
    CHECK(c5.omega_bracket == CyclotomicNum::from_long(5, 1) + d1 * d1);

    for (int r = 3; r <= 31; r += 2) {
        const QuantumContext ctx = quantum_context(r);
        CHECK(ctx.eta_sq * ctx.omega_bracket == CyclotomicNum::from_long(r, 1));
        // kappa^6 = A_r^{-6 - r(r+1)/2}
        CHECK(ctx.kappa6 == CyclotomicNum::zeta_pow(r, -6 - static_cast<long>(r) * (r + 1) / 2));
    }
    CHECK_THROWS_AS((void)quantum_context(4), std::invalid_argument);
    CHECK_THROWS_AS((void)quantum_context(1), std::invalid_argument);
}

TEST_CASE("invariant values at small levels") {
    // r = 3: the bare invariant has the single term i = 0.
    CHECK(invariant_sum(3, 0) == CyclotomicNum::from_long(3, 1));
    // r = 3: the (0,0,1) closed form equals 1 at zeta_6.
    CHECK(invariant_sum(3, 1) == CyclotomicNum::from_long(3, 1));
    // r = 5 bare invariant: 1 + A^6 Delta_1 at the root.
    const CyclotomicNum expected =
        CyclotomicNum::from_long(5, 1) + eval_at_root(delta_poly(1).shifted(6), 5);
    CHECK(invariant_sum(5, 0) == expected);
    CHECK_THROWS_AS((void)invariant_sum(5, 3), std::invalid_argument);
}

TEST_CASE("the two routes to the (0,0,2) invariant agree") {
    for (int r = 3; r <= 31; r += 2) {
        const CyclotomicNum direct = invariant_sum(r, 2);
        const CyclotomicNum derived = (invariant_sum(r, 0) - CyclotomicNum::from_long(r, 1)) *
                                      CyclotomicNum::zeta_pow(r, -4);
        CHECK(direct == derived);
    }
}

TEST_CASE("identity checks at small levels") {
    for (int r = 3; r <= 31; r += 2) {
        const PropCheck check = prop_checks(r);
        CHECK(check.gauss_identity);
        CHECK(check.skein2_identity);
        CHECK(check.skein1_closed_form);
        CHECK(check.skein1_nonzero);
    }
}

TEST_CASE("complex embedding matches direct evaluation") {
    const mpfr_prec_t prec = 128;
    const Real tol = Real::pow2(-static_cast<long>(prec) + 16, prec);
    for (int r : {3, 7, 11}) {
        const Real pi = Real::pi(prec);
        const Complex z = Complex::unit(pi / Real(static_cast<long>(r), prec));
        for (int k = 0; k < 6; ++k) {
            const LaurentPoly p = delta_poly(k);
            const Complex via_field = eval_at_root(p, r).embed(prec);
            const Complex direct = eval_complex(RationalFn(p), z, prec);
            CHECK((via_field - direct).abs() < tol);
        }
    }

    // A^4 - 1 (the smallest rewriting determinant) at e^{i pi / 7}:
    // float route against the exact cyclotomic route.
    const RationalFn det(mono(1, 4) - LaurentPoly(1));
    const Complex z7 = Complex::unit(Real::pi(prec) / Real(7L, prec));
    const Complex direct = eval_complex(det, z7, prec);
    const Complex exact = eval_at_root(det, 7).embed(prec);
    CHECK((direct - exact).abs() < Real(1e-30, prec));
}
