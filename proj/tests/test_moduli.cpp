#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "gib/moduli.hpp"

using namespace gib;

namespace {
PolyQ P(std::vector<long> v) { return poly_from_ints(v); }
}  // namespace

TEST_CASE("real quadratic: two real classes") {
    auto cls = eigenvalue_classes(P({1, -3, 1}));
    REQUIRE(cls.size() == 2);
    CHECK(cls[0].is_real);
    CHECK(cls[1].is_real);
    CHECK(compare(cls[0].modulus_sq, cls[1].modulus_sq) < 0);
    // (3-sqrt5)/2 squared = (7-3 sqrt5)/2, a root of x^2 - 7x + 1
    CHECK(cls[0].modulus_sq.minpoly == P({1, -7, 1}));
}

TEST_CASE("complex quadratic: modulus squared is the constant term") {
    auto cls = eigenvalue_classes(P({1, 0, 1}));  // x^2 + 1
    REQUIRE(cls.size() == 1);
    CHECK(!cls[0].is_real);
    CHECK(cls[0].modulus_sq.is_rational());
    CHECK(cls[0].modulus_sq.rational_value() == Rat(1));
    CHECK(cls[0].re.lo == 0);
    CHECK(cls[0].re.hi == 0);

    auto cls2 = eigenvalue_classes(P({5, -2, 1}));  // roots 1 +- 2i
    REQUIRE(cls2.size() == 1);
    CHECK(cls2[0].modulus_sq.rational_value() == Rat(5));
    CHECK(cls2[0].re.lo == 1);
}

TEST_CASE("seventh cyclotomic: three pairs on the unit circle") {
    auto cls = eigenvalue_classes(P({1, 1, 1, 1, 1, 1, 1}));
    REQUIRE(cls.size() == 3);
    for (const auto& c : cls) {
        CHECK(!c.is_real);
        CHECK(c.modulus_sq.is_rational());
        CHECK(c.modulus_sq.rational_value() == Rat(1));
    }
    auto mc = modulus_classes(P({1, 1, 1, 1, 1, 1, 1}));
    REQUIRE(mc.size() == 1);
    CHECK(mc[0].total_dim == 6);
}

TEST_CASE("reciprocal quartic with a unit-circle pair") {
    // roots r, 1/r (real) and one conjugate pair of modulus 1
    PolyQ p = P({1, -3, 3, -3, 1});
    auto cls = eigenvalue_classes(p);
    REQUIRE(cls.size() == 3);
    int reals = 0, complexes = 0;
    for (const auto& c : cls) {
        if (c.is_real)
            ++reals;
        else {
            ++complexes;
            CHECK(c.modulus_sq.is_rational());
            CHECK(c.modulus_sq.rational_value() == Rat(1));
        }
    }
    CHECK(reals == 2);
    CHECK(complexes == 1);
    // the two real moduli^2 multiply to 1: as doubles
    double prod = 1;
    for (const auto& c : cls)
        if (c.is_real) prod *= to_double(c.modulus_sq);
    CHECK(std::abs(prod - 1.0) < 1e-9);
}

TEST_CASE("quartic with two complex pairs of distinct irrational moduli") {
    PolyQ p = P({1, 1, 0, 0, 1});  // x^4 + x + 1, no real roots
    auto cls = eigenvalue_classes(p);
    REQUIRE(cls.size() == 2);
    CHECK(!cls[0].is_real);
    CHECK(!cls[1].is_real);
    CHECK(compare(cls[0].modulus_sq, cls[1].modulus_sq) < 0);
    double m1 = to_double(cls[0].modulus_sq), m2 = to_double(cls[1].modulus_sq);
    CHECK(std::abs(m1 * m2 - 1.0) < 1e-9);  // product of all roots is 1
    // enclosures really contain the roots: check p(re + i im) is near 0
    for (const auto& c : cls) {
        double re = 0.5 * (to_double(c.re.lo) + to_double(c.re.hi));
        double im = 0.5 * (to_double(c.im.lo) + to_double(c.im.hi));
        std::complex<double> z(re, im), val(0, 0);
        for (int i = p.degree(); i >= 0; --i) val = val * z + to_double(p.c[i]);
        CHECK(std::abs(val) < 1e-4);
        CHECK(std::abs(std::norm(z) - to_double(c.modulus_sq)) < 1e-4);
    }
}

TEST_CASE("mixed real and complex quartic") {
    // x^4 - 2x^3 + x - 1
    PolyQ p = P({-1, 1, 0, -2, 1});
    auto cls = eigenvalue_classes(p);
    int total_dim = 0;
    for (const auto& c : cls) total_dim += c.dim();
    CHECK(total_dim == 4);
}

TEST_CASE("twelfth cyclotomic: two pairs of equal modulus") {
    PolyQ p = P({1, 0, -1, 0, 1});  // x^4 - x^2 + 1
    auto cls = eigenvalue_classes(p);
    REQUIRE(cls.size() == 2);
    for (const auto& c : cls) {
        CHECK(!c.is_real);
        CHECK(c.modulus_sq.rational_value() == Rat(1));
    }
    auto mc = modulus_classes(p);
    REQUIRE(mc.size() == 1);
    CHECK(mc[0].total_dim == 4);
}

TEST_CASE("randomized stress: class dimensions, counts, and products") {
    std::mt19937 gen(240817);
    std::uniform_int_distribution<int> deg(3, 6), coeff(-4, 4);
    int tested = 0;
    while (tested < 60) {
        int n = deg(gen);
        std::vector<Rat> c(n + 1);
        for (auto& x : c) x = coeff(gen);
        c.back() = 1;  // monic
        if (c[0] == 0) continue;
        PolyQ p(std::move(c));
        if (!is_irreducible(p)) continue;
        ++tested;
        CAPTURE(to_string(p));
        auto cls = eigenvalue_classes(p);
        int total = 0, reals = 0;
        double log_product = 0;
        for (const auto& e : cls) {
            total += e.dim();
            if (e.is_real) ++reals;
            CHECK(sign_of(e.modulus_sq) > 0);
            log_product += e.dim() * 0.5 * std::log(to_double(e.modulus_sq));
        }
        CHECK(total == n);
        CHECK(reals == count_real_roots(p));
        // product of all root moduli equals |constant term| for monic p
        double expect = std::log(std::abs(to_double(p.c[0])));
        CHECK(std::abs(log_product - expect) < 1e-6);
        // classes are sorted by modulus
        for (size_t i = 0; i + 1 < cls.size(); ++i)
            CHECK(compare(cls[i].modulus_sq, cls[i + 1].modulus_sq) <= 0);
    }
}
