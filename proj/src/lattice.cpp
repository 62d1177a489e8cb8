#include "gib/lattice.hpp"

#include <cassert>

namespace gib {

namespace {

void col_axpy(MatZ& m, size_t dst, size_t src, const Int& f) {
    // col_dst += f * col_src
    for (size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

void col_swap(MatZ& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void col_neg(MatZ& m, size_t a) {
    for (size_t i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

// combined gcd step on columns a, b pivoting on row: after it,
// m(row, a) = gcd, m(row, b) = 0; U tracks the same operations
void gcd_step(MatZ& m, MatZ& u, size_t row, size_t a, size_t b) {
    Int x = m(row, a), y = m(row, b);
    assert(y != 0);
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Int xg = x / g, yg = y / g;
    // (col_a, col_b) <- (s col_a + t col_b, -yg col_a + xg col_b)
    for (MatZ* mat : {&m, &u}) {
        MatZ& mm = *mat;
        for (size_t i = 0; i < mm.rows(); ++i) {
            Int ca = mm(i, a), cb = mm(i, b);
            mm(i, a) = s * ca + t * cb;
            mm(i, b) = xg * cb - yg * ca;
        }
    }
}

}  // namespace

std::pair<MatZ, MatZ> hnf_with_transform(const MatZ& a) {
    MatZ h = a;
    size_t n = h.rows(), k = h.cols();
    MatZ u = MatZ::identity(k);
    size_t next_col = 0;
    for (size_t row = 0; row < n && next_col < k; ++row) {
        size_t piv = next_col;
        while (piv < k && h(row, piv) == 0) ++piv;
        if (piv == k) continue;
        if (piv != next_col) {
            col_swap(h, next_col, piv);
            col_swap(u, next_col, piv);
        }
        for (size_t c = next_col + 1; c < k; ++c)
            if (h(row, c) != 0) gcd_step(h, u, row, next_col, c);
        if (h(row, next_col) < 0) {
            col_neg(h, next_col);
            col_neg(u, next_col);
        }
        const Int& piv_val = h(row, next_col);
        for (size_t c = 0; c < next_col; ++c) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(row, c).get_mpz_t(), piv_val.get_mpz_t());
            if (q != 0) {
                col_axpy(h, c, next_col, -q);
                col_axpy(u, c, next_col, -q);
            }
        }
        ++next_col;
    }
    return {h, u};
}

MatZ hnf(const MatZ& a) {
    auto [h, u] = hnf_with_transform(a);
    // drop trailing zero columns
    size_t r = h.cols();
    auto col_zero = [&](size_t c) {
        for (size_t i = 0; i < h.rows(); ++i)
            if (h(i, c) != 0) return false;
        return true;
    };
    while (r > 0 && col_zero(r - 1)) --r;
    MatZ out(h.rows(), r);
    for (size_t i = 0; i < h.rows(); ++i)
        for (size_t j = 0; j < r; ++j) out(i, j) = h(i, j);
    return out;
}

MatZ integer_kernel(const MatZ& a) {
    auto [h, u] = hnf_with_transform(a);
    auto col_zero = [&](size_t c) {
        for (size_t i = 0; i < h.rows(); ++i)
            if (h(i, c) != 0) return false;
        return true;
    };
    std::vector<size_t> zero_cols;
    for (size_t c = 0; c < h.cols(); ++c)
        if (col_zero(c)) zero_cols.push_back(c);
    MatZ ker(a.cols(), zero_cols.size());
    for (size_t j = 0; j < zero_cols.size(); ++j)
        for (size_t i = 0; i < a.cols(); ++i) ker(i, j) = u(i, zero_cols[j]);
    return hnf(ker);
}

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
    Int den = 1;
    for (const auto& x : v) {
        Int d = x.get_den();
        den = den / gcd_int(den, d) * d;
    }
    std::vector<Int> out;
    out.reserve(v.size());
    Int content = 0;
    for (const auto& x : v) {
        Int n = x.get_num() * (den / x.get_den());
        content = gcd_int(content, n);
        out.push_back(n);
    }
    if (content > 1)
        for (auto& x : out) x /= content;
    return out;
}

MatZ hnf_saturate_cols(const MatZ& cols) {
    size_t n = cols.rows();
    // rational annihilator of the span
    MatQ bt = to_mat_q(cols).transpose();
    auto ann = kernel(bt);  // covectors in Q^n
    if (ann.empty()) return MatZ::identity(n);
    MatZ m(ann.size(), n);
    for (size_t i = 0; i < ann.size(); ++i) {
        auto row = primitive_integer_vector(ann[i]);
        for (size_t j = 0; j < n; ++j) m(i, j) = row[j];
    }
    return integer_kernel(m);
}

LatticeBasis hnf_saturate(const std::vector<std::vector<Int>>& vectors, size_t n) {
    MatZ cols(n, vectors.size());
    for (size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != n) throw std::invalid_argument("vector dimension mismatch");
        for (size_t i = 0; i < n; ++i) cols(i, j) = vectors[j][i];
    }
    return LatticeBasis{n, hnf_saturate_cols(cols)};
}

}  // namespace gib
