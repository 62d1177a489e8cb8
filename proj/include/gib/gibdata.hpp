#pragma once

#include <optional>
#include <string>

#include "gib/matrix.hpp"

namespace gib {

// Arithmetic data (n, H, V, b): a splitting R^n = H + V with H irrational
// with respect to Z^n and b an inner product on H, carried exactly over a
// real quadratic field (or Q).
struct GibData {
    size_t n = 0;
    long d = 0;   // quadratic field parameter; 0 means everything is rational
    MatK h_basis;  // n x dim H, columns span H
    MatK v_basis;  // n x dim V
    MatK gram;     // dim H x dim H, b in H-coordinates

    size_t dim_h() const { return h_basis.cols(); }
    size_t dim_v() const { return v_basis.cols(); }
};

struct ValidationReport {
    bool dims_ok = false;
    bool independent = false;      // H-basis and V-basis jointly span R^n
    bool gram_symmetric = false;
    bool gram_positive = false;    // exact leading principal minors
    bool irrational = false;       // H + Z^n dense
    std::string message;

    bool ok() const {
        return dims_ok && independent && gram_symmetric && gram_positive && irrational;
    }
};

ValidationReport validate(const GibData& data);

// True iff no nonzero rational covector annihilates the span of the columns:
// write each column as v0 + v1 sqrt(d) and stack v0, v1 as rows; the span is
// irrational iff that rational matrix has trivial right kernel.
bool is_irrational(const MatK& h_basis, size_t n);

// rational vectors lying inside the span (H cap Q^n); empty iff trivial
std::vector<std::vector<Rat>> rational_vectors_in_span(const MatK& basis, size_t n);

// Membership verdict for Aut(n, H, V, b).
struct AutReport {
    bool in_glnz = false;
    bool preserves_h = false;
    bool preserves_v = false;
    bool is_similarity = false;
    std::optional<QuadElem> ratio_sq;  // present iff is_similarity
    bool is_strict = false;            // ratio_sq != 1, exactly
    bool is_member = false;

    std::optional<MatK> restriction_h;  // matrix of M|_H in H-coordinates
    std::optional<MatK> restriction_v;  // matrix of M|_V in V-coordinates
};

AutReport check_automorphism(const MatZ& m, const GibData& data);

// the unique rho with R^T gram R = rho gram; requires a similarity member
QuadElem similarity_ratio_sq(const MatZ& m, const GibData& data);

}  // namespace gib
