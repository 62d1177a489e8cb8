#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gib/classify.hpp"
#include "gib/construct.hpp"
#include "gib/equations.hpp"
#include "gib/harness.hpp"
#include "gib/lattice.hpp"

using namespace gib;

namespace {

GibData companion_data() {
    QuadElem mu(Rat(3, 2), Rat(-1, 2), 5);
    QuadElem nu(Rat(3, 2), Rat(1, 2), 5);
    GibData d;
    d.n = 2;
    d.d = 5;
    d.h_basis = MatK(2, 1);
    d.h_basis(0, 0) = QuadElem(1);
    d.h_basis(1, 0) = -mu;
    d.v_basis = MatK(2, 1);
    d.v_basis(0, 0) = QuadElem(1);
    d.v_basis(1, 0) = -nu;
    d.gram = MatK(1, 1);
    d.gram(0, 0) = QuadElem(1);
    return d;
}

MatZ Z(size_t r, size_t c, std::vector<long> v) {
    std::vector<Int> e(v.begin(), v.end());
    return MatZ(r, c, std::move(e));
}

}  // namespace

TEST_CASE("degenerate rational splitting gives a single commutation matrix") {
    GibData d;
    d.n = 2;
    d.d = 0;
    d.h_basis = MatK(2, 1);
    d.h_basis(0, 0) = QuadElem(1);
    d.v_basis = MatK(2, 1);
    d.v_basis(1, 0) = QuadElem(1);
    d.gram = MatK(1, 1);
    d.gram(0, 0) = QuadElem(1);
    auto eqs = zariski_equations(d);
    REQUIRE(eqs.commute_mats.size() == 1);
    // the projector itself, scaled primitive: diag(1, 0)
    CHECK(eqs.commute_mats[0] == to_mat_q(Z(2, 2, {1, 0, 0, 0})));
}

TEST_CASE("companion data: both components occur") {
    GibData d = companion_data();
    auto eqs = zariski_equations(d);
    REQUIRE(eqs.commute_mats.size() == 2);
    REQUIRE(eqs.form_mats.size() == 2);
    for (const auto& q : eqs.form_mats) CHECK(q == q.transpose());
    // reconstruction is asserted inside; double-check the projector squares
    CHECK(eqs.projector * eqs.projector == eqs.projector);
}

TEST_CASE("fundamental example: two commutation matrices") {
    auto fund = build_fund_example();
    auto eqs = zariski_equations(fund.data);
    CHECK(eqs.commute_mats.size() == 2);
    CHECK(eqs.projector * eqs.projector == eqs.projector);

    CHECK(equations_satisfied(fund.a, eqs, EqMode::det_twisted));
    CHECK(!equations_satisfied(fund.a, eqs, EqMode::isometry));
    CHECK(equations_satisfied(fund.witnesses[0].second, eqs, EqMode::isometry));
    CHECK(equations_satisfied(fund.witnesses[0].second, eqs, EqMode::det_twisted));
    CHECK(equations_satisfied(fund.witnesses[1].second, eqs, EqMode::isometry));
    CHECK(equations_satisfied(MatZ::identity(6), eqs, EqMode::isometry));
}

TEST_CASE("soundness: members with ratio one satisfy the isometry equations") {
    auto fund = build_fund_example();
    auto eqs = zariski_equations(fund.data);
    MatZ rot = fund.witnesses[0].second, hyp = fund.witnesses[1].second;
    std::vector<MatZ> sample{rot, hyp, rot * hyp, hyp * rot, rot * rot * hyp};
    for (const auto& m : sample) {
        auto rep = check_automorphism(m, fund.data);
        REQUIRE(rep.is_member);
        if (*rep.ratio_sq == QuadElem(1)) CHECK(equations_satisfied(m, eqs, EqMode::isometry));
        CHECK(equations_satisfied(m, eqs, EqMode::det_twisted));
    }
}

TEST_CASE("desk-scale completeness on the companion fixture") {
    GibData d = companion_data();
    auto eqs = zariski_equations(d);
    // brute force all integer 2x2 matrices with entries in [-2, 2] here;
    // the acceptance suite runs the full [-3, 3] box
    std::vector<MatZ> eq_set, direct_set;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c)
                for (long e = -2; e <= 2; ++e) {
                    MatZ m = Z(2, 2, {a, b, c, e});
                    if (!is_glnz(m)) continue;
                    if (equations_satisfied(m, eqs, EqMode::isometry)) eq_set.push_back(m);
                    auto rep = check_automorphism(m, d);
                    if (rep.is_member && *rep.ratio_sq == QuadElem(1)) direct_set.push_back(m);
                }
    CHECK(eq_set == direct_set);
    CHECK(eq_set.size() == 2);  // +-identity
}

TEST_CASE("det-twisted mode distinguishes non-members") {
    GibData d = companion_data();
    auto eqs = zariski_equations(d);
    CHECK(equations_satisfied(Z(2, 2, {0, -1, 1, 3}), eqs, EqMode::det_twisted));
    CHECK(!equations_satisfied(Z(2, 2, {0, -1, 1, 3}), eqs, EqMode::isometry));
    CHECK(!equations_satisfied(Z(2, 2, {1, 1, 0, 1}), eqs, EqMode::det_twisted));
    CHECK(!equations_satisfied(Z(2, 2, {0, 1, 1, 0}), eqs, EqMode::det_twisted));
}

TEST_CASE("desk-scale completeness on a four-dimensional fixture") {
    // two companion blocks sharing their eigenvalue moduli
    MatZ m4(4, 4);
    m4(0, 1) = -1;
    m4(1, 0) = 1;
    m4(1, 1) = 3;
    m4(2, 3) = -1;
    m4(3, 2) = 1;
    m4(3, 3) = -3;
    auto cls = classify_similarity(m4);
    REQUIRE(cls.accepted());
    REQUIRE(cls.candidates[0].gib);
    GibData data = *cls.candidates[0].gib;
    auto eqs = zariski_equations(data);

    // Both solution sets lie inside the commutant lattice of the A_i
    // (members preserve H and V, hence commute with the projector), so
    // enumerating that lattice's points with entries in [-3, 3] is an
    // exhaustive search of the full 7^16 box.
    const size_t n = 4;
    size_t rows = eqs.commute_mats.size() * n * n;
    MatQ con(rows, n * n);
    size_t row = 0;
    for (const auto& a : eqs.commute_mats) {
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c, ++row) {
                for (size_t k = 0; k < n; ++k) {
                    con(row, k * n + c) += a(r, k);  // A[r][k] M[k][c]
                    con(row, r * n + k) -= a(k, c);  // -M[r][k] A[k][c]
                }
            }
    }
    MatZ coni(rows, n * n);
    for (size_t i = 0; i < rows; ++i) {
        std::vector<Rat> v(n * n);
        for (size_t j = 0; j < n * n; ++j) v[j] = con(i, j);
        auto prim = primitive_integer_vector(v);
        for (size_t j = 0; j < n * n; ++j) coni(i, j) = prim[j];
    }
    MatZ basis = integer_kernel(coni);
    // the projector commutant: maps preserving both H and V, including the
    // cross-block intertwiners
    CHECK(basis.cols() == 8);

    std::vector<size_t> pivot(basis.cols());
    for (size_t j = 0; j < basis.cols(); ++j) {
        size_t i = 0;
        while (basis(i, j) == 0) ++i;
        pivot[j] = i;
    }
    std::vector<MatZ> eq_set, direct_set;
    // column-style lower-triangular basis: after choosing the coordinate of
    // column j, every row below the next pivot is final, so prune there
    std::function<void(size_t, std::vector<Int>&)> rec = [&](size_t j, std::vector<Int>& acc) {
        if (j == basis.cols()) {
            MatZ m(n, n);
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) m(r, c) = acc[r * n + c];
            if (!is_glnz(m)) return;
            if (equations_satisfied(m, eqs, EqMode::isometry)) eq_set.push_back(m);
            auto rep = check_automorphism(m, data);
            if (rep.is_member && *rep.ratio_sq == QuadElem(1)) direct_set.push_back(m);
            return;
        }
        Int piv = basis(pivot[j], j);
        Int base = acc[pivot[j]];
        size_t final_until = (j + 1 < basis.cols()) ? pivot[j + 1] : n * n;
        Int span = (abs_int(base) + 3) / abs_int(piv) + 1;
        for (Int c = -span; c <= span; ++c) {
            Int val = base + c * piv;
            if (val < -3 || val > 3) continue;
            std::vector<Int> acc2 = acc;
            for (size_t r = pivot[j]; r < n * n; ++r) acc2[r] += c * basis(r, j);
            bool ok = true;
            for (size_t r = pivot[j]; r < final_until && ok; ++r)
                if (acc2[r] < -3 || acc2[r] > 3) ok = false;
            if (ok) rec(j + 1, acc2);
        }
    };
    std::vector<Int> zero(n * n, Int(0));
    rec(0, zero);
    auto less = [](const MatZ& a, const MatZ& b) { return lex_less(a, b); };
    std::sort(eq_set.begin(), eq_set.end(), less);
    std::sort(direct_set.begin(), direct_set.end(), less);
    CHECK(eq_set == direct_set);
    CHECK(eq_set.size() >= 4);  // contains diag(+-I, +-I)
    MESSAGE("isometric members in the box: ", eq_set.size());
}
