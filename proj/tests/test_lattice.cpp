#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gib/blocks.hpp"
#include "gib/lattice.hpp"

using namespace gib;

namespace {

MatZ Z(size_t r, size_t c, std::vector<long> v) {
    std::vector<Int> e(v.begin(), v.end());
    return MatZ(r, c, std::move(e));
}

std::mt19937 rng(11235);

MatZ random_unimodular(size_t n, int ops = 10) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    MatZ u = MatZ::identity(n);
    for (int k = 0; k < ops; ++k) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        MatZ e = MatZ::identity(n);
        e(i, j) = coef(rng);
        u = u * e;
    }
    return u;
}

}  // namespace

TEST_CASE("hnf convention") {
    // columns (2,2) and (0,4): already lower triangular, reduced
    MatZ h = hnf(Z(2, 2, {2, 0, 2, 4}));
    CHECK(h == Z(2, 2, {2, 0, 2, 4}));
    // pivot sign and reduction
    MatZ h2 = hnf(Z(2, 2, {-3, 1, 0, 1}));
    for (size_t j = 0; j < h2.cols(); ++j) {
        size_t i = 0;
        while (i < h2.rows() && h2(i, j) == 0) ++i;
        REQUIRE(i < h2.rows());
        CHECK(h2(i, j) > 0);
    }
}

TEST_CASE("hnf transform is unimodular") {
    for (int t = 0; t < 20; ++t) {
        MatZ a(3, 4);
        std::uniform_int_distribution<int> c(-6, 6);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 4; ++j) a(i, j) = c(rng);
        auto [h, u] = hnf_with_transform(a);
        CHECK(abs_int(det(u)) == 1);
        CHECK(to_mat_q(a) * to_mat_q(u) == to_mat_q(h));
    }
}

TEST_CASE("integer kernel") {
    MatZ k = integer_kernel(Z(1, 2, {2, 4}));
    REQUIRE(k.cols() == 1);
    // primitive kernel vector (2, -1) up to sign
    CHECK(abs_int(k(0, 0)) == 2);
    CHECK(abs_int(k(1, 0)) == 1);
    CHECK(2 * k(0, 0) + 4 * k(1, 0) == 0);
    CHECK(integer_kernel(MatZ::identity(2)).cols() == 0);
}

TEST_CASE("saturation: content is divided out") {
    auto s = hnf_saturate({{Int(2), Int(0)}}, 2);
    CHECK(s.basis == Z(2, 1, {1, 0}));
}

TEST_CASE("saturation: standard basis is fixed") {
    auto s = hnf_saturate({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2);
    CHECK(s.basis == MatZ::identity(2));
    CHECK(s.is_unimodular_change());
}

TEST_CASE("saturation of a full-rank sublattice is the full lattice") {
    // the rational span of (2,2), (0,4) is all of Q^2, so the saturation is Z^2
    auto s = hnf_saturate({{Int(2), Int(2)}, {Int(0), Int(4)}}, 2);
    CHECK(s.basis == MatZ::identity(2));
}

TEST_CASE("saturation of rank-1 sublattices") {
    auto s = hnf_saturate({{Int(4), Int(6)}}, 2);
    CHECK(s.basis == Z(2, 1, {2, 3}));
    auto t = hnf_saturate({{Int(3), Int(6), Int(3)}, {Int(1), Int(2), Int(1)}}, 3);
    CHECK(t.basis == Z(3, 1, {1, 2, 1}));
}

TEST_CASE("saturating twice is idempotent") {
    std::uniform_int_distribution<int> c(-5, 5);
    for (int t = 0; t < 40; ++t) {
        MatZ cols(4, 2);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 2; ++j) cols(i, j) = c(rng);
        MatZ once = hnf_saturate_cols(cols);
        CHECK(hnf_saturate_cols(once) == once);
    }
}

TEST_CASE("block decomposition: companion matrix is a single block") {
    MatZ a = Z(2, 2, {0, -1, 1, 3});
    auto res = block_decompose(a);
    auto* dec = std::get_if<BlockDecomposition>(&res);
    REQUIRE(dec);
    CHECK(dec->u == MatZ::identity(2));
    REQUIRE(dec->blocks.size() == 1);
    CHECK(dec->blocks[0] == a);
    CHECK(dec->charpolys[0] == poly_from_ints({1, -3, 1}));
}

TEST_CASE("block decomposition: two copies of a companion") {
    MatZ a(4, 4);
    MatZ c = Z(2, 2, {0, -1, 1, 3});
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) a(2 * b + i, 2 * b + j) = c(i, j);
    auto res = block_decompose(a);
    auto* dec = std::get_if<BlockDecomposition>(&res);
    REQUIRE(dec);
    CHECK(dec->blocks.size() == 2);
    REQUIRE(dec->groups.size() == 1);
    CHECK(dec->groups[0].size() == 2);
}

TEST_CASE("block decomposition reports the index-2 obstruction of the swap") {
    MatZ a = Z(2, 2, {0, 1, 1, 0});
    auto res = block_decompose(a);
    auto* obs = std::get_if<BlockObstruction>(&res);
    REQUIRE(obs);
    CHECK(obs->index == 2);
    CHECK(abs_int(det(obs->sublattice)) == 2);
}

TEST_CASE("block decomposition rejects defective matrices") {
    CHECK_THROWS_AS(block_decompose(Z(2, 2, {1, 1, 0, 1})), std::domain_error);
}

TEST_CASE("conjugation invariance of the block charpoly multiset") {
    MatZ base(4, 4);
    MatZ c1 = Z(2, 2, {0, -1, 1, 3});
    MatZ c2 = Z(2, 2, {-1, -1, -1, -2});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            base(i, j) = c1(i, j);
            base(2 + i, 2 + j) = c2(i, j);
        }
    auto collect = [](const MatZ& m) {
        auto res = block_decompose(m);
        auto* dec = std::get_if<BlockDecomposition>(&res);
        REQUIRE(dec != nullptr);
        std::vector<PolyQ> ps = dec->charpolys;
        std::sort(ps.begin(), ps.end(), poly_less);
        return ps;
    };
    auto expected = collect(base);
    for (int t = 0; t < 10; ++t) {
        MatZ w = random_unimodular(4);
        auto wi = inverse(to_mat_q(w));
        REQUIRE(wi);
        auto conj = to_mat_z(*wi * to_mat_q(base) * to_mat_q(w));
        REQUIRE(conj);
        CHECK(collect(*conj) == expected);
    }
}

TEST_CASE("block charpolys multiply to the full characteristic polynomial") {
    MatZ a(6, 6);
    MatZ c1 = Z(2, 2, {0, -1, 1, 3});
    MatZ c2 = Z(2, 2, {-1, -1, -1, -2});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a(i, j) = c1(i, j);
            a(2 + i, 2 + j) = c2(i, j);
        }
    a(4, 4) = 0;
    a(4, 5) = -1;
    a(5, 4) = 1;
    a(5, 5) = 0;  // rotation block x^2 + 1
    auto res = block_decompose(a);
    auto* dec = std::get_if<BlockDecomposition>(&res);
    REQUIRE(dec);
    PolyQ prod = PolyQ::constant(Rat(1));
    for (const auto& f : dec->charpolys) {
        CHECK(is_irreducible(f));
        prod = prod * f;
    }
    CHECK(prod == charpoly(a));
    CHECK(abs_int(det(dec->u)) == 1);
}
