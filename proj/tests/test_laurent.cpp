#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skein/cyclotomic.hpp"
#include "skein/laurent.hpp"

using skein::LaurentPoly;

namespace {

LaurentPoly mono(long c, long e) {
    return LaurentPoly::monomial(c, e);
}

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<long> expo(-8, 8);
    LaurentPoly p;
    for (int t = 0; t < 6; ++t) p += mono(coeff(rng), expo(rng));
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic stays canonical") {
    const LaurentPoly a = mono(1, 1) + mono(1, -1);  // A + A^{-1}
    const LaurentPoly sum = a + mono(-1, -1);
    CHECK(sum == mono(1, 1));
    CHECK(sum.term_count() == 1);

    // (A^2+A^{-2})(A^2-A^{-2}) = A^4 - A^{-4}
    const LaurentPoly prod = (mono(1, 2) + mono(1, -2)) * (mono(1, 2) - mono(1, -2));
    CHECK(prod == mono(1, 4) - mono(1, -4));

    CHECK((a - a).is_zero());
    CHECK(LaurentPoly(7).is_constant());
}

TEST_CASE("bar negates exponents") {
    const LaurentPoly p = mono(1, 2) + mono(3, -5);
    CHECK(p.bar() == mono(1, -2) + mono(3, 5));
    CHECK(p.bar().bar() == p);
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly p = random_poly(rng), q = random_poly(rng), s = random_poly(rng);
        CHECK((p * q) * s == p * (q * s));
        CHECK(p * (q + s) == p * q + p * s);
        CHECK((p * q).bar() == p.bar() * q.bar());
        CHECK((p + q).bar() == p.bar() + q.bar());
    }
}

TEST_CASE("exact division") {
    const LaurentPoly f = (mono(1, 3) + mono(2, 0) + mono(1, -2)) * (mono(5, 2) - mono(1, -1));
    const auto q = f.divided_exactly_by(mono(5, 2) - mono(1, -1));
    REQUIRE(q.has_value());
    CHECK(*q == mono(1, 3) + mono(2, 0) + mono(1, -2));
    CHECK_FALSE((f + LaurentPoly(1)).divided_exactly_by(mono(5, 2) - mono(1, -1)).has_value());
}

TEST_CASE("text form round-trips") {
    const LaurentPoly p = mono(-1, -2) + mono(-1, 2);
    CHECK(p.to_string() == "-1*A^-2 + -1*A^2");
    CHECK(LaurentPoly::from_string(p.to_string()) == p);
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::from_string("0").is_zero());

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const LaurentPoly q = random_poly(rng);
        CHECK(LaurentPoly::from_string(q.to_string()) == q);
    }
}

TEST_CASE("cyclotomic polynomials by divide-out") {
    CHECK(skein::cyclotomic(1) == mono(1, 1) - LaurentPoly(1));
    CHECK(skein::cyclotomic(2) == mono(1, 1) + LaurentPoly(1));
    CHECK(skein::cyclotomic(12) == mono(1, 4) - mono(1, 2) + LaurentPoly(1));
    // Phi_n(A) divides A^n - 1 for a spread of n.
    for (int n : {1, 2, 3, 4, 6, 9, 10, 15, 24, 30}) {
        const LaurentPoly target = mono(1, n) - LaurentPoly(1);
        CHECK(target.divided_exactly_by(skein::cyclotomic(n)).has_value());
    }
}

TEST_CASE("unit certificates in the localized ring") {
    const auto unit_monomial = skein::is_unit_in_r(mono(1, 5));
    REQUIRE(unit_monomial.has_value());
    CHECK(unit_monomial->sign == 1);
    CHECK(unit_monomial->monomial_power == 5);
    CHECK(unit_monomial->cyclotomic_indices.empty());

    const auto a4 = skein::is_unit_in_r(mono(1, 4) - LaurentPoly(1));
    REQUIRE(a4.has_value());
    CHECK(a4->cyclotomic_indices == std::vector<int>{1, 2, 4});

    // The coefficient rewriting (1,2,1): A^{-6}(A^4-A^2)(A^4+A^2) = A^2 - A^{-2}.
    const LaurentPoly coeff = mono(1, 2) - mono(1, -2);
    const auto cert = skein::is_unit_in_r(coeff);
    REQUIRE(cert.has_value());
    CHECK(cert->reconstruct() == coeff);

    CHECK_FALSE(skein::is_unit_in_r(mono(1, 1) + LaurentPoly(2)).has_value());
    CHECK_FALSE(skein::is_unit_in_r(LaurentPoly(2)).has_value());
    CHECK_THROWS_AS((void)skein::is_unit_in_r(LaurentPoly()), std::domain_error);
}

TEST_CASE("certificates reconstruct their input exactly") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick(1, 12);
    std::uniform_int_distribution<long> shift(-6, 6);
    std::uniform_int_distribution<int> flip(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly u = mono(flip(rng) ? 1 : -1, shift(rng));
        for (int k = 0; k < 3; ++k) u *= skein::cyclotomic(pick(rng));
        const auto cert = skein::is_unit_in_r(u);
        REQUIRE(cert.has_value());
        CHECK(cert->reconstruct() == u);
    }
}
