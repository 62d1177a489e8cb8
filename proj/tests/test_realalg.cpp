#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gib/realalg.hpp"

using namespace gib;

namespace {
PolyQ P(std::vector<long> v) { return poly_from_ints(v); }
}  // namespace

TEST_CASE("isolation: golden quadratic") {
    auto roots = isolate_real_roots(P({1, -3, 1}));  // roots (3 +- sqrt 5)/2
    REQUIRE(roots.size() == 2);
    CHECK(Rat(0) <= roots[0].lo);
    CHECK(roots[0].hi <= Rat(1));
    CHECK(Rat(2) <= roots[1].lo);
    CHECK(roots[1].hi <= Rat(3));
}

TEST_CASE("isolation: no real roots and exact root") {
    CHECK(isolate_real_roots(P({1, 0, 1})).empty());
    auto one = isolate_real_roots(P({-2, 1}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].is_rational());
    CHECK(one[0].rational_value() == Rat(2));
}

TEST_CASE("isolation rejects non-squarefree input") {
    CHECK_THROWS_AS(isolate_real_roots(P({1, -2, 1})), std::invalid_argument);
}

TEST_CASE("interval count equals Sturm count") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> deg(1, 6);
    int tried = 0;
    while (tried < 120) {
        int n = deg(rng);
        std::vector<Rat> c(n + 1);
        for (auto& x : c) x = coeff(rng);
        PolyQ p(std::move(c));
        if (p.degree() < 1 || !is_squarefree_poly(p)) continue;
        ++tried;
        CAPTURE(to_string(p));
        auto roots = isolate_real_roots(p);
        CHECK(static_cast<int>(roots.size()) == count_real_roots(p));
        // disjoint and ascending
        for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
        // refinement by bisection never loses the root
        for (auto r : roots) {
            RealAlgebraic orig = r;
            for (int k = 0; k < 8; ++k) refine_step(r);
            CHECK(orig.lo <= r.lo);
            CHECK(r.hi <= orig.hi);
            if (r.minpoly.degree() > 1)
                CHECK(sgn(r.minpoly(r.lo)) * sgn(r.minpoly(r.hi)) < 0);
        }
    }
}

TEST_CASE("comparisons") {
    auto roots = isolate_real_roots(P({1, -3, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(compare(roots[0], roots[1]) < 0);
    CHECK(compare(roots[0], roots[0]) == 0);
    CHECK(compare_rat(roots[0], Rat(1)) < 0);
    CHECK(compare_rat(roots[1], Rat(1)) > 0);
    CHECK(compare_rat(RealAlgebraic(Rat(7)), Rat(7)) == 0);

    // same minimal polynomial, overlapping but distinct isolations
    RealAlgebraic small(P({1, -3, 1}), Rat(1, 4), Rat(1));
    RealAlgebraic wide_small(P({1, -3, 1}), Rat(0), Rat(2));
    CHECK(compare(small, wide_small) == 0);
    RealAlgebraic big(P({1, -3, 1}), Rat(2), Rat(28, 10));
    CHECK(compare(small, big) < 0);
}

TEST_CASE("sign_at") {
    auto roots = isolate_real_roots(P({-2, 0, 1}));  // +- sqrt 2
    REQUIRE(roots.size() == 2);
    const auto& sqrt2 = roots[1];
    CHECK(sign_at(P({-1, 1}), sqrt2) > 0);       // sqrt2 - 1 > 0
    CHECK(sign_at(P({-2, 1}), sqrt2) < 0);       // sqrt2 - 2 < 0
    CHECK(sign_at(P({-2, 0, 1}), sqrt2) == 0);   // own minimal polynomial
    CHECK(sign_at(P({-4, 0, 0, 0, 1}), sqrt2) == 0);  // x^4 - 4 = (x^2-2)(x^2+2)
}

TEST_CASE("square of an algebraic number") {
    auto roots = isolate_real_roots(P({-2, 0, 1}));
    RealAlgebraic two = square(roots[0]);  // (-sqrt2)^2 = 2
    CHECK(two.is_rational());
    CHECK(two.rational_value() == Rat(2));

    auto golden = isolate_real_roots(P({-1, -1, 1}));  // (1 +- sqrt5)/2
    REQUIRE(golden.size() == 2);
    RealAlgebraic g2 = square(golden[1]);  // phi^2 = phi + 1, root of x^2-3x+1
    CHECK(g2.minpoly == P({1, -3, 1}));
    CHECK(compare_rat(g2, Rat(2)) > 0);
}

TEST_CASE("embedding quadratic field elements") {
    QuadElem lam(Rat(-3, 2), Rat(1, 2), 5);  // (-3+sqrt5)/2 < 0
    RealAlgebraic r = to_real_algebraic(lam);
    CHECK(sign_of(r) == -1);
    CHECK(r.minpoly == P({1, 3, 1}));
    CHECK(to_real_algebraic(QuadElem(Rat(1, 3))).is_rational());
}

TEST_CASE("modulus comparison on real inputs") {
    QuadElem mu_small(Rat(3, 2), Rat(-1, 2), 5);  // (3 - sqrt5)/2
    QuadElem mu_big(Rat(3, 2), Rat(1, 2), 5);     // (3 + sqrt5)/2
    auto a = to_real_algebraic(mu_small), b = to_real_algebraic(mu_big);
    CHECK(compare_moduli(a, b) < 0);
    CHECK(compare_moduli(a, a) == 0);
    CHECK(compare_moduli(a, RealAlgebraic(Rat(1))) < 0);
    // |(-3+sqrt5)/2| equals (3-sqrt5)/2
    auto c = to_real_algebraic(QuadElem(Rat(-3, 2), Rat(1, 2), 5));
    CHECK(compare_moduli(c, a) == 0);
}
