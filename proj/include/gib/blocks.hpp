#pragma once

#include <variant>

#include "gib/lattice.hpp"

namespace gib {

// Adapted unimodular basis in which an integer matrix is block diagonal with
// irreducible characteristic polynomials per block.
struct BlockDecomposition {
    MatZ u;                                    // det +-1; u^-1 A u block diagonal
    std::vector<MatZ> blocks;                  // diagonal blocks, in column order
    std::vector<PolyQ> charpolys;              // per block, irreducible over Q
    std::vector<std::vector<size_t>> groups;   // block indices grouped by equal charpoly
};

// The invariant sublattices only sum to a finite-index sublattice of Z^n;
// the candidate realizes the smallest index the search found.
struct BlockObstruction {
    Int index;        // > 1
    MatZ sublattice;  // n x n candidate basis with |det| = index
    std::string reason;
};

using BlockResult = std::variant<BlockDecomposition, BlockObstruction>;

// Computes the adapted decomposition of a GL(n, Z) matrix: saturated kernel
// lattices of the irreducible factors of the characteristic polynomial,
// multiplicity factors split by cyclic-subspace search. Throws
// std::domain_error when no such form exists at any index (defective
// eigenstructure); returns a BlockObstruction when the adapted basis only
// exists at finite index > 1.
BlockResult block_decompose(const MatZ& a);

// restriction of a to the column span of c (a * c = c * r); requires exact
// integer solvability
MatZ restriction_matrix(const MatZ& a, const MatZ& c);

}  // namespace gib
