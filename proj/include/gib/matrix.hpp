#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gib/poly.hpp"

namespace gib {

template <class T>
class Mat {
  public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}
    Mat(size_t rows, size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows * cols) throw std::invalid_argument("entry count mismatch");
    }
    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const T& operator()(size_t r, size_t c) const { return e_[r * cols_ + c]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.check_same_shape(b);
        Mat r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        a.check_same_shape(b);
        Mat r = a;
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
        return r;
    }
    friend Mat operator-(const Mat& a) {
        Mat r = a;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }
    friend Mat operator*(const T& s, const Mat& a) {
        Mat r = a;
        for (auto& x : r.e_) x = s * x;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> col(size_t j) const {
        std::vector<T> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(size_t j, const std::vector<T>& v) {
        for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    template <class F>
    auto map(F f) const {
        using U = decltype(f(std::declval<T>()));
        Mat<U> r(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!(x == T(0))) return false;
        return true;
    }

  private:
    void check_same_shape(const Mat& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> e_;
};

using MatQ = Mat<Rat>;
using MatK = Mat<QuadElem>;
using MatZ = Mat<Int>;

template <class T>
Mat<T> mat_pow(const Mat<T>& a, unsigned long e) {
    Mat<T> r = Mat<T>::identity(a.rows());
    Mat<T> b = a;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// Kronecker product; dimensions multiply
template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

// reduced row echelon form in place; returns pivot columns
template <class T>
std::vector<size_t> rref(Mat<T>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m(sel, col) == T(0)) ++sel;
        if (sel == m.rows()) continue;
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (size_t j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == T(0)) continue;
            T f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
size_t rank(Mat<T> m) {
    return rref(m).size();
}

// basis of the right kernel; empty iff injective
template <class T>
std::vector<std::vector<T>> kernel(Mat<T> m) {
    size_t n = m.cols();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<T> v(n, T(0));
        v[j] = T(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] < j) v[pivots[r]] = -m(r, j);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// coordinates of v in the column span of s, if any
template <class T>
std::optional<std::vector<T>> solve_in_span(const Mat<T>& s, const std::vector<T>& v) {
    if (s.rows() != v.size()) throw std::invalid_argument("solve_in_span shape mismatch");
    Mat<T> aug(s.rows(), s.cols() + 1);
    for (size_t i = 0; i < s.rows(); ++i) {
        for (size_t j = 0; j < s.cols(); ++j) aug(i, j) = s(i, j);
        aug(i, s.cols()) = v[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == s.cols()) return std::nullopt;  // inconsistent
    std::vector<T> x(s.cols(), T(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, s.cols());
    return x;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& m) {
    if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
    size_t n = m.rows();
    Mat<T> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots[n - 1] != n - 1) return std::nullopt;
    Mat<T> inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <class T>
T det(Mat<T> m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = m.rows();
    T d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m(sel, col) == T(0)) ++sel;
        if (sel == n) return T(0);
        if (sel != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
            d = -d;
        }
        d = d * m(col, col);
        T inv = T(1) / m(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == T(0)) continue;
            T f = inv * m(i, col);
            for (size_t j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return d;
}

// monic characteristic polynomial det(xI - M), by the Faddeev-LeVerrier
// recurrence (division-free up to the integer divisions it prescribes)
template <class T>
PolyT<T> charpoly(const Mat<T>& m) {
    if (!m.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
    size_t n = m.rows();
    std::vector<T> coeffs(n + 1, T(0));
    coeffs[n] = T(1);
    Mat<T> mk = Mat<T>::identity(n);  // M_0 = I
    for (size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        T tr(0);
        for (size_t i = 0; i < n; ++i) tr = tr + mk(i, i);
        T ck = -(T(1) / T(static_cast<int>(k))) * tr;
        coeffs[n - k] = ck;
        for (size_t i = 0; i < n; ++i) mk(i, i) = mk(i, i) + ck;
    }
    return PolyT<T>(std::move(coeffs));
}

// evaluate a rational polynomial at a matrix
template <class T>
Mat<T> poly_at_matrix(const PolyQ& p, const Mat<T>& m) {
    Mat<T> r(m.rows(), m.cols());
    for (size_t i = p.c.size(); i-- > 0;) {
        r = r * m;
        for (size_t k = 0; k < m.rows(); ++k) r(k, k) = r(k, k) + T(p.c[i]);
    }
    return r;
}

inline MatQ to_mat_q(const MatZ& m) {
    return m.map([](const Int& x) { return Rat(x); });
}

inline std::optional<MatZ> to_mat_z(const MatQ& m) {
    MatZ r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) return std::nullopt;
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

inline MatK to_mat_k(const MatQ& m, long d = 0) {
    (void)d;
    return m.map([](const Rat& x) { return QuadElem(x); });
}

// entries all integers and determinant +-1
inline bool is_glnz(const MatQ& m) {
    if (!m.square()) throw std::invalid_argument("is_glnz expects a square matrix");
    auto z = to_mat_z(m);
    if (!z) return false;
    Rat d = det(m);
    return d == 1 || d == -1;
}

inline bool is_glnz(const MatZ& m) { return is_glnz(to_mat_q(m)); }

// integer matrices take the exact rational route for these
inline PolyQ charpoly(const MatZ& m) { return charpoly(to_mat_q(m)); }
inline Int det(const MatZ& m) {
    Rat d = det(to_mat_q(m));
    return d.get_num();
}

// components of a matrix over Q(sqrt d): M = A0 + A1 * sqrt(d)
std::pair<MatQ, MatQ> split_components(const MatK& m);

// shared field parameter of all entries (0 when all rational)
long field_of(const MatK& m);

MatK lift_to_field(const MatQ& m);

std::string to_string(const MatQ& m);
std::string to_string(const MatZ& m);
std::string to_string(const MatK& m);

}  // namespace gib
