#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gib/poly.hpp"
#include "oracle_factor.hpp"

using namespace gib;

namespace {

PolyQ P(std::vector<long> v) { return poly_from_ints(v); }

std::mt19937 rng(987654);

PolyQ random_poly(int max_deg, int coeff_bound) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    int n = deg(rng);
    std::vector<Rat> c(n + 1);
    for (auto& x : c) x = coeff(rng);
    while (c.back() == 0) c.back() = coeff(rng);
    return PolyQ(std::move(c));
}

}  // namespace

TEST_CASE("divmod and gcd basics") {
    PolyQ a = P({-1, 0, 1});  // x^2 - 1
    PolyQ b = P({1, 1});      // x + 1
    auto [q, r] = divmod(a, b);
    CHECK(q == P({-1, 1}));
    CHECK(r.is_zero());
    CHECK(poly_gcd(a, b) == b.monic());
    CHECK(poly_gcd(P({0}), P({0})).is_zero());
    CHECK_THROWS_AS(divmod(a, PolyQ()), std::invalid_argument);
}

TEST_CASE("squarefree decomposition") {
    // (x-1)^2 (x+2)
    PolyQ p = P({1, -2, 1}) * P({2, 1});
    auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0] == std::pair<PolyQ, int>{P({2, 1}), 1});
    CHECK(dec[1] == std::pair<PolyQ, int>{P({-1, 1}), 2});
    CHECK(is_squarefree_poly(P({-1, 0, 1})));
    CHECK(!is_squarefree_poly(P({1, -2, 1})));
}

TEST_CASE("factor: named cases") {
    auto f1 = factor_poly_q(P({1, -3, 1}));  // x^2 - 3x + 1, discriminant 5
    REQUIRE(f1.size() == 1);
    CHECK(f1[0] == std::pair<PolyQ, int>{P({1, -3, 1}), 1});

    auto f2 = factor_poly_q(P({-1, 0, 1}));  // (x-1)(x+1)
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].first == P({-1, 1}));
    CHECK(f2[1].first == P({1, 1}));

    // needs genuine logic; frozen against the brute-force oracle
    PolyQ quartic = P({1, 3, 1, 3, 1});
    auto f3 = factor_poly_q(quartic);
    CHECK(f3 == oracle::oracle_factor(quartic));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].second == 1);  // irreducible

    CHECK_THROWS_AS(factor_poly_q(PolyQ()), std::invalid_argument);
}

TEST_CASE("factor: non-monic and repeated") {
    PolyQ p = Rat(7) * (P({1, 2}) * P({1, 2}) * P({-3, 0, 2}));
    auto f = factor_poly_q(p);
    auto g = oracle::oracle_factor(p);
    CHECK(f == g);
    Rat lead = p.lead();
    PolyQ prod = PolyQ::constant(Rat(1));
    for (auto& [h, m] : f)
        for (int i = 0; i < m; ++i) prod = prod * h;
    CHECK(lead * prod == p);
}

TEST_CASE("factor matches oracle on random inputs") {
    for (int i = 0; i < 250; ++i) {
        PolyQ p = random_poly(6, 5);
        CAPTURE(to_string(p));
        CHECK(factor_poly_q(p) == oracle::oracle_factor(p));
    }
}

TEST_CASE("factor reconstructs its input") {
    for (int i = 0; i < 120; ++i) {
        PolyQ p = random_poly(5, 4) * random_poly(3, 3);
        auto f = factor_poly_q(p);
        PolyQ prod = PolyQ::constant(p.lead());
        for (auto& [h, m] : f)
            for (int k = 0; k < m; ++k) prod = prod * h;
        CHECK(prod == p);
        for (auto& [h, m] : f) CHECK(h.lead() == 1);
    }
}

TEST_CASE("squares resolvent") {
    // roots 2, -3 -> squares 4, 9
    PolyQ p = P({-2, 1}) * P({3, 1});
    PolyQ s = squares_resolvent(p);
    CHECK(s == P({-4, 1}) * P({-9, 1}));
    // x^2 - 2 -> (y - 2)^2
    CHECK(squares_resolvent(P({-2, 0, 1})) == P({-2, 1}) * P({-2, 1}));
}

TEST_CASE("sylvester resultant") {
    // res(x^2 - 1, x - 2) = 3; res with shared root = 0
    PolyQ a = P({-1, 0, 1}), b = P({-2, 1});
    CHECK(sylvester_resultant(a, b, exact_div_rat) == Rat(3));
    CHECK(sylvester_resultant(a, P({1, 1}), exact_div_rat) == Rat(0));
}
