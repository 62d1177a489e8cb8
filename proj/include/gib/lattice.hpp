#pragma once

#include "gib/matrix.hpp"

namespace gib {

// Basis of a full-rank or partial sublattice of Z^n, columns as vectors.
struct LatticeBasis {
    size_t n = 0;
    MatZ basis;  // n x k, full column rank

    bool is_unimodular_change() const {
        if (basis.rows() != basis.cols() || basis.rows() != n) return false;
        Int d = det(basis);
        return d == 1 || d == -1;
    }
};

// Column-style lower-triangular Hermite normal form: H = A * U for unimodular
// U, pivot rows strictly increasing left to right, pivots positive, entries
// left of a pivot in its row reduced to [0, pivot). Zero columns are dropped.
// Fixture files depend on this convention.
MatZ hnf(const MatZ& a);

// also returns U (square, det +-1) with A * U = [H | 0]
std::pair<MatZ, MatZ> hnf_with_transform(const MatZ& a);

// basis of { x in Z^n : a x = 0 }, HNF-canonical columns
MatZ integer_kernel(const MatZ& a);

// Saturation (Q-span intersected with Z^n) of the lattice generated by the
// given vectors, as an HNF basis.
LatticeBasis hnf_saturate(const std::vector<std::vector<Int>>& vectors, size_t n);
MatZ hnf_saturate_cols(const MatZ& cols);

// clears denominators of a rational vector to a primitive integer vector
std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v);

}  // namespace gib
