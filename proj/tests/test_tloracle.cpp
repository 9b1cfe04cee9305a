#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "skein/errors.hpp"
#include "skein/tl.hpp"

using namespace skein;

namespace {

const RationalFn kDelta(delta_poly(1));

}  // namespace

TEST_CASE("planar matchings are validated and counted by Catalan numbers") {
    CHECK_THROWS_AS(PlanarMatching(2, 2, {2, 3, 0, 1}), std::invalid_argument);  // crossing
    CHECK_THROWS_AS(PlanarMatching(1, 1, {0, 1}), std::invalid_argument);        // fixed point

    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n)
        CHECK(static_cast<long>(all_planar_matchings(0, 2 * n).size()) == catalan[n]);
}

TEST_CASE("diagram algebra relations") {
    const TLElement id2 = TLElement::identity(2);
    const TLElement e1 = TLElement::hook(2, 0);

    CHECK(id2.compose(id2).combo() == id2.combo());
    CHECK(e1.compose(e1).combo() == e1.scaled(kDelta).combo());

    const TLElement a = TLElement::hook(3, 0);
    const TLElement b = TLElement::hook(3, 1);
    CHECK(a.compose(b).compose(a).combo() == a.combo());
    CHECK(b.compose(a).compose(b).combo() == b.combo());

    CHECK_THROWS_AS((void)id2.compose(TLElement::identity(3)), std::invalid_argument);
}

TEST_CASE("jones-wenzl idempotents") {
    const TLElement f2 = jones_wenzl(2);
    TLElement expected = TLElement::identity(2) +
                         TLElement::hook(2, 0).scaled(RationalFn::one() / RationalFn(-delta_poly(1)));
    CHECK(f2.combo() == expected.combo());
    CHECK(jones_wenzl(2).trace_closure() == RationalFn(delta_poly(2)));

    for (int n = 1; n <= 6; ++n) {
        const TLElement f = jones_wenzl(n);
        CHECK(f.compose(f).combo() == f.combo());
        for (int i = 0; i + 1 < n; ++i) {
            CHECK(TLElement::hook(n, i).compose(f).is_zero());
            CHECK(f.compose(TLElement::hook(n, i)).is_zero());
        }
    }
    CHECK_THROWS_AS((void)jones_wenzl(9), CapExceededError);
}

TEST_CASE("idempotents at the cap") {
    for (int n : {7, 8}) {
        const TLElement f = jones_wenzl(n);
        CHECK(f.combo().count(PlanarMatching::identity(n)) == 1);
        CHECK(f.combo().at(PlanarMatching::identity(n)) == RationalFn::one());
        for (int i = 0; i + 1 < n; ++i) {
            CHECK(TLElement::hook(n, i).compose(f).is_zero());
            CHECK(f.compose(TLElement::hook(n, i)).is_zero());
        }
        CHECK(f.compose(f).combo() == f.combo());
    }
}

TEST_CASE("closed networks match the closed forms on small labels") {
    SUBCASE("delta") {
        for (int n = 0; n <= 8; ++n)
            CHECK(evaluate_network(NetworkKind::delta, {n}) == RationalFn(delta_poly(n)));
    }

    SUBCASE("theta") {
        CHECK(evaluate_network(NetworkKind::theta, {1, 1, 2}) ==
              RationalFn(LaurentPoly::monomial(1, 4) + LaurentPoly(1) + LaurentPoly::monomial(1, -4)));
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; a + b <= 9; ++b)
                for (int c = 0; a + b + c <= 12; ++c)
                    CHECK(evaluate_network(NetworkKind::theta, {a, b, c}) == theta(a, b, c));
    }

    SUBCASE("lambda") {
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; a + b <= 7; ++b)
                for (int c = 0; c <= a + b; ++c) {
                    if (!admissible(a, b, c)) continue;
                    CHECK(evaluate_network(NetworkKind::lambda, {a, b, c}) ==
                          RationalFn(lambda_coeff(a, b, c)));
                }
    }

    SUBCASE("tet") {
        int compared = 0;
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; a + b <= 8; ++b)
                for (int c = 0; a + b + c <= 8; ++c)
                    for (int d = 0; a + b + c + d <= 8; ++d)
                        for (int e = 0; a + b + c + d + e <= 8; ++e)
                            for (int f = 0; a + b + c + d + e + f <= 8; ++f) {
                                const RationalFn diagram =
                                    evaluate_network(NetworkKind::tet, {a, b, c, d, e, f});
                                CHECK(diagram == tet({a, b, c, d, e, f}));
                                if (!diagram.is_zero()) ++compared;
                            }
        CHECK(compared >= 30);
    }

    SUBCASE("caps are enforced") {
        CHECK_THROWS_AS((void)evaluate_network(NetworkKind::theta, {8, 8, 8}), CapExceededError);
        CHECK_THROWS_AS((void)evaluate_network(NetworkKind::tet, {4, 4, 4, 4, 4, 4}), CapExceededError);
    }
}

TEST_CASE("caches are safe to share across threads") {
    // Hammer the memoized paths from several workers and compare
    // against values computed up front.
    const RationalFn t222 = theta(2, 2, 2);
    const RationalFn d6(delta_poly(6));
    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&] {
            for (int rep = 0; rep < 10; ++rep) {
                if (theta(2, 2, 2) != t222) ++mismatches;
                if (evaluate_network(NetworkKind::delta, {6}) != d6) ++mismatches;
                if (tet({2, 3, 2, 3, 3, 1}) != tet({3, 2, 3, 2, 3, 1})) ++mismatches;
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(mismatches == 0);
}
