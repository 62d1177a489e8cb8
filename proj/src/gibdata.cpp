#include "gib/gibdata.hpp"

#include <cassert>

namespace gib {

namespace {

// columns of both bases side by side
MatK joint_basis(const GibData& data) {
    MatK s(data.n, data.dim_h() + data.dim_v());
    for (size_t i = 0; i < data.n; ++i) {
        for (size_t j = 0; j < data.dim_h(); ++j) s(i, j) = data.h_basis(i, j);
        for (size_t j = 0; j < data.dim_v(); ++j) s(i, data.dim_h() + j) = data.v_basis(i, j);
    }
    return s;
}

}  // namespace

bool is_irrational(const MatK& h_basis, size_t n) {
    if (h_basis.rows() != n) throw std::invalid_argument("basis row count mismatch");
    auto [v0, v1] = split_components(h_basis);
    MatQ rows(2 * h_basis.cols(), n);
    for (size_t j = 0; j < h_basis.cols(); ++j)
        for (size_t i = 0; i < n; ++i) {
            rows(2 * j, i) = v0(i, j);
            rows(2 * j + 1, i) = v1(i, j);
        }
    return kernel(rows).empty();
}

std::vector<std::vector<Rat>> rational_vectors_in_span(const MatK& basis, size_t n) {
    // a rational x lies in the span iff every annihilating covector kills it;
    // covectors are the right kernel of basis^T, and for rational x the
    // rational and irrational components of each covector act separately
    auto ann = kernel(basis.transpose());
    MatQ stacked(2 * ann.size(), n);
    for (size_t k = 0; k < ann.size(); ++k)
        for (size_t i = 0; i < n; ++i) {
            stacked(2 * k, i) = ann[k][i].a;
            stacked(2 * k + 1, i) = ann[k][i].b;
        }
    return kernel(stacked);
}

ValidationReport validate(const GibData& data) {
    ValidationReport rep;
    rep.dims_ok = data.n >= 2 && data.dim_h() >= 1 && data.dim_v() >= 1 &&
                  data.dim_h() + data.dim_v() == data.n &&
                  data.h_basis.rows() == data.n && data.v_basis.rows() == data.n &&
                  data.gram.rows() == data.dim_h() && data.gram.cols() == data.dim_h();
    if (!rep.dims_ok) {
        rep.message = "dimension mismatch: need dim H >= 1, dim V >= 1, dim H + dim V = n";
        return rep;
    }
    rep.independent = rank(joint_basis(data)) == data.n;
    if (!rep.independent) rep.message += "H and V do not span R^n jointly; ";

    rep.gram_symmetric = data.gram == data.gram.transpose();
    if (!rep.gram_symmetric) rep.message += "gram matrix is not symmetric; ";

    rep.gram_positive = rep.gram_symmetric;
    if (rep.gram_symmetric) {
        for (size_t k = 1; k <= data.dim_h(); ++k) {
            MatK minor(k, k);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) minor(i, j) = data.gram(i, j);
            if (real_sign(det(minor)) <= 0) {
                rep.gram_positive = false;
                rep.message += "gram matrix is not positive definite (leading minor " +
                               std::to_string(k) + "); ";
                break;
            }
        }
    }

    rep.irrational = is_irrational(data.h_basis, data.n);
    if (!rep.irrational) rep.message += "H is not irrational with respect to Z^n; ";
    if (rep.ok()) rep.message = "ok";
    return rep;
}

AutReport check_automorphism(const MatZ& m, const GibData& data) {
    if (m.rows() != data.n || m.cols() != data.n)
        throw std::invalid_argument("matrix size does not match the data dimension");
    AutReport rep;
    rep.in_glnz = is_glnz(m);

    MatK mk = to_mat_q(m).map([](const Rat& x) { return QuadElem(x); });

    // preservation: solve M h_j in span(H) for every basis column
    auto restrict_to = [&](const MatK& basis) -> std::optional<MatK> {
        MatK r(basis.cols(), basis.cols());
        for (size_t j = 0; j < basis.cols(); ++j) {
            std::vector<QuadElem> img(data.n, QuadElem());
            for (size_t i = 0; i < data.n; ++i) {
                QuadElem acc;
                for (size_t k = 0; k < data.n; ++k) acc += mk(i, k) * basis(k, j);
                img[i] = acc;
            }
            auto coords = solve_in_span(basis, img);
            if (!coords) return std::nullopt;
            for (size_t i = 0; i < basis.cols(); ++i) r(i, j) = (*coords)[i];
        }
        return r;
    };

    auto rh = restrict_to(data.h_basis);
    rep.preserves_h = rh.has_value();
    auto rv = restrict_to(data.v_basis);
    rep.preserves_v = rv.has_value();
    if (rep.preserves_v) rep.restriction_v = rv;

    if (rep.preserves_h) {
        rep.restriction_h = rh;
        // R^T gram R = rho * gram for one scalar rho
        MatK lhs = rh->transpose() * data.gram * *rh;
        std::optional<QuadElem> rho;
        bool consistent = true;
        for (size_t i = 0; i < data.gram.rows() && consistent; ++i)
            for (size_t j = 0; j < data.gram.cols() && consistent; ++j) {
                if (!(data.gram(i, j) == QuadElem())) {
                    QuadElem r = lhs(i, j) / data.gram(i, j);
                    if (!rho)
                        rho = r;
                    else if (!(*rho == r))
                        consistent = false;
                } else if (!(lhs(i, j) == QuadElem())) {
                    consistent = false;
                }
            }
        if (consistent && rho && real_sign(*rho) > 0) {
            rep.is_similarity = true;
            rep.ratio_sq = *rho;
            rep.is_strict = !(*rho == QuadElem(1));
        }
    }
    rep.is_member = rep.in_glnz && rep.preserves_h && rep.preserves_v && rep.is_similarity;
    return rep;
}

QuadElem similarity_ratio_sq(const MatZ& m, const GibData& data) {
    AutReport rep = check_automorphism(m, data);
    if (!rep.is_similarity)
        throw std::invalid_argument("matrix does not restrict to a b-similarity of H");
    return *rep.ratio_sq;
}

}  // namespace gib
