#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skein/errors.hpp"
#include "skein/eval.hpp"
#include "skein/linsolve.hpp"
#include "skein/ratfn.hpp"

using skein::Complex;
using skein::LaurentPoly;
using skein::RationalFn;
using skein::Real;

namespace {

LaurentPoly mono(long c, long e) {
    return LaurentPoly::monomial(c, e);
}

RationalFn frac(const LaurentPoly& n, const LaurentPoly& d) {
    return RationalFn(n, d);
}

}  // namespace

TEST_CASE("normalization invariants") {
    // Denominator keeps a nonzero constant term and positive leading
    // coefficient; monomial units move into the numerator.
    const RationalFn f = frac(mono(1, 0), mono(2, 3) - mono(2, 1));
    CHECK(f.den().coeff(0) != 0);
    CHECK(f.den().leading_coeff() > 0);
    CHECK(f.num() * (mono(2, 3) - mono(2, 1)) == f.den());

    const RationalFn g = frac(mono(1, 2) - mono(1, 0), mono(-1, 5));
    CHECK(g.is_polynomial());

    CHECK(frac(LaurentPoly(), mono(1, 1) + LaurentPoly(1)).is_zero());
    CHECK_THROWS_AS(frac(LaurentPoly(1), LaurentPoly()), std::domain_error);
}

TEST_CASE("field arithmetic examples") {
    const LaurentPoly a = mono(1, 1);
    // 1/(A-1) + 1/(A+1) = 2A/(A^2-1)
    const RationalFn left = frac(LaurentPoly(1), a - LaurentPoly(1)) +
                            frac(LaurentPoly(1), a + LaurentPoly(1));
    CHECK(left == frac(mono(2, 1), mono(1, 2) - LaurentPoly(1)));

    // f/f = 1 for a handful of nonzero f.
    for (const auto& f : {frac(mono(3, -2) + mono(1, 4), mono(1, 1) + LaurentPoly(1)),
                          RationalFn(mono(-2, 7)), frac(LaurentPoly(5), mono(1, 2) + LaurentPoly(3))}) {
        CHECK(f / f == RationalFn::one());
    }

    // Cross-multiplication equality: A^2 - A^{-2} == (A^4-1)/A^2.
    CHECK(RationalFn(mono(1, 2) - mono(1, -2)) == frac(mono(1, 4) - LaurentPoly(1), mono(1, 2)));

    CHECK_THROWS_AS((void)(RationalFn::one() / RationalFn::zero()), std::domain_error);
}

TEST_CASE("normalized equality is structural") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<long> expo(-5, 5);
    auto random_poly = [&] {
        LaurentPoly p;
        for (int t = 0; t < 4; ++t) p += mono(coeff(rng), expo(rng));
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentPoly n = random_poly();
        LaurentPoly d = random_poly();
        if (d.is_zero()) d = LaurentPoly(1);
        const LaurentPoly scale = random_poly();
        if (scale.is_zero()) continue;
        const RationalFn f = frac(n, d);
        const RationalFn g = frac(n * scale, d * scale);
        CHECK(f == g);
        CHECK(f.num() == g.num());
        CHECK(f.den() == g.den());
    }
}

TEST_CASE("exact linear solving") {
    using skein::RatMatrix;
    using skein::RatVector;
    const RationalFn one = RationalFn::one();
    const RationalFn a = RationalFn(mono(1, 1));

    SUBCASE("identity") {
        const RatMatrix m{{one, RationalFn()}, {RationalFn(), one}};
        const RatVector b{a, a * a};
        const auto sol = skein::solve_linear_system(m, b);
        CHECK(sol.x[0] == a);
        CHECK(sol.x[1] == a * a);
        CHECK(sol.det == one);
    }

    SUBCASE("triangular") {
        const RatMatrix m{{a, one}, {RationalFn(), a}};
        const RatVector b{one, a};
        const auto sol = skein::solve_linear_system(m, b);
        CHECK(sol.x[0] == RationalFn::zero());
        CHECK(sol.x[1] == one);
        CHECK(sol.det == a * a);
    }

    SUBCASE("resubstitution on random systems") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> coeff(-3, 3);
        std::uniform_int_distribution<long> expo(-3, 3);
        auto random_fn = [&] {
            LaurentPoly p;
            for (int t = 0; t < 3; ++t) p += mono(coeff(rng), expo(rng));
            return RationalFn(p);
        };
        for (int trial = 0; trial < 20; ++trial) {
            RatMatrix m(3, RatVector(3));
            RatVector b(3);
            for (auto& row : m)
                for (auto& entry : row) entry = random_fn();
            for (auto& entry : b) entry = random_fn();
            const RationalFn det = skein::determinant(m);
            if (det.is_zero()) continue;
            const auto sol = skein::solve_linear_system(m, b);
            CHECK(sol.det == det);
            for (int i = 0; i < 3; ++i) {
                RationalFn acc;
                for (int j = 0; j < 3; ++j) acc += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
                CHECK(acc == b[static_cast<std::size_t>(i)]);
            }
        }
    }

    SUBCASE("singular system is an error") {
        const RatMatrix m{{one, one}, {one, one}};
        CHECK_THROWS_AS((void)skein::solve_linear_system(m, {one, one}), skein::SingularSystemError);
        CHECK(skein::determinant(m).is_zero());
    }
}

TEST_CASE("complex evaluation") {
    const mpfr_prec_t prec = 128;
    const Real pi = Real::pi(prec);
    const Complex z = Complex::unit(pi / Real(3L, prec));

    SUBCASE("A at a unit point returns the point") {
        const Complex v = skein::eval_complex(RationalFn(mono(1, 1)), z, prec);
        CHECK((v - z).abs() < Real::pow2(-100, prec));
    }

    SUBCASE("A^2 + A^{-2} at i is -2") {
        const Complex i(Real(prec), Real(1L, prec));
        const Complex v = skein::eval_complex(RationalFn(mono(1, 2) + mono(1, -2)), i, prec);
        CHECK((v - Complex(Real(-2L, prec), Real(prec))).abs() < Real::pow2(-100, prec));
    }

    SUBCASE("pole raises") {
        const RationalFn f = frac(LaurentPoly(1), mono(1, 2) + LaurentPoly(1));
        const Complex i(Real(prec), Real(1L, prec));
        CHECK_THROWS_AS((void)skein::eval_complex(f, i, prec), skein::PoleError);
    }

    SUBCASE("multiplicativity within tolerance") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<long> coeff(-3, 3);
        std::uniform_int_distribution<long> expo(-4, 4);
        auto random_fn = [&] {
            LaurentPoly p;
            for (int t = 0; t < 4; ++t) p += mono(coeff(rng), expo(rng));
            LaurentPoly d;
            for (int t = 0; t < 3; ++t) d += mono(coeff(rng), expo(rng));
            if (d.is_zero()) d = LaurentPoly(1);
            return frac(p, d);
        };
        const Real tol = Real::pow2(-static_cast<long>(prec) + 8, prec);
        int done = 0;
        for (int trial = 0; trial < 40 && done < 20; ++trial) {
            const RationalFn f = random_fn(), g = random_fn();
            try {
                const Complex lhs = skein::eval_complex(f * g, z, prec);
                const Complex rhs = skein::eval_complex(f, z, prec) * skein::eval_complex(g, z, prec);
                CHECK((lhs - rhs).abs() < tol);
                ++done;
            } catch (const skein::PoleError&) {
                continue;  // random denominator vanished at z
            }
        }
        CHECK(done > 0);
    }
}
