#pragma once

#include "gib/equations.hpp"
#include "gib/gibdata.hpp"

namespace gib {

// Restriction of scalars for a rank-m module over the ring of integers of
// Q(sqrt d): the Z-basis is {1, w} per coordinate, pairs ordered
// (e_1, w e_1, e_2, w e_2, ...).
struct DeltaEmbedding {
    long d = 0;
    size_t m = 0;
};

// integer matrix of an integral K-matrix acting on O^m in the Z-basis;
// multiplicative: delta(g h) = delta(g) delta(h)
MatZ delta_embed(const MatK& g, const DeltaEmbedding& emb);

// 2x2 integer matrix of multiplication by an integral element in {1, w}
MatZ multiplication_matrix(const QuadElem& x, long d);

// The GIB data carried by the restriction lattice: H is the conjugate-place
// factor, V the identity factor, and b the conjugated form read in
// H-coordinates. `form` is the symmetric K-form preserved on the identity
// factor.
GibData delta_gib_data(const MatK& form, const DeltaEmbedding& emb);

struct FundBundle {
    GibData data;                 // (6, H, V, q*) over Q(sqrt 5)
    MatZ a;                       // strict witness, multiplication by the unit
    QuadElem lambda;              // (-3 + sqrt 5)/2, the similarity factor on H
    MatK q_form;                  // x^2 + y^2 - sqrt5 z^2
    std::vector<std::pair<std::string, MatK>> group_elements;   // in SO(q, O_k)
    std::vector<std::pair<std::string, MatZ>> witnesses;        // their images
};

// The explicit non-abelian example over Q(sqrt 5): the lattice
// Delta(O_k^3), the similarity A given by the unit (-3+sqrt5)/2, the finite
// rotation g0 and a hyperbolic element of SO(q, O_k).
FundBundle build_fund_example();

enum class FormVariant { orthogonal, unitary };

// Exhaustive search for integral matrices with ring coordinates in
// [-bound, bound] preserving the form (g^T F g = F, or tau(g^T) F g = F)
// with determinant 1, in lexicographic coordinate order.
std::vector<MatK> search_form_group(const MatK& form, long d, FormVariant variant, long bound);

// g -> (g, (g^T)^-1); throws on singular input
std::pair<MatK, MatK> phi_embed(const MatK& g);

// phi(g) preserves the lattice L = {(s, A tau(s)) : s integral} iff g is
// integral and (g^T)^-1 A = A tau(g); checked as a matrix identity. The field
// parameter d fixes K = Q(sqrt d) even when every entry happens rational.
bool phi_lattice_stable(const MatK& g, const MatK& a, long d);
// same decision through explicit images of the module generators
bool phi_lattice_stable_membership(const MatK& g, const MatK& a, long d);
// g in SU(A, tau; O_K): integral, det 1, tau(g^T) A g = A
bool su_member(const MatK& g, const MatK& a, long d);

// A scaling candidate acting as (x, y) -> (alpha x, beta y) on the two real
// places, with both lattice-preservation verdicts.
struct ScalingVariant {
    std::string name;
    QuadElem multiplier;
    QuadElem alpha, beta;
    MatK lattice_matrix;       // the action in the restriction-lattice basis
    bool preserves_lattice;    // integer entries with det +-1
    bool membership_agrees;    // image-vector membership gives the same verdict
};

MatK diagonal_action_in_lattice(const QuadElem& alpha, const QuadElem& beta, long d, size_t m);
bool preserves_delta_lattice(const QuadElem& alpha, const QuadElem& beta, long d);
bool preserves_delta_lattice_membership(const QuadElem& alpha, const QuadElem& beta, long d);
ScalingVariant make_scaling_variant(const std::string& name, const QuadElem& multiplier,
                                    const QuadElem& alpha, const QuadElem& beta, long d,
                                    size_t m);

// Parabolic data for SO(p+1, r+1): the light-like stabilizer generators and
// the associated GIB data over Q(sqrt 2).
struct SopqBundle {
    long p = 0, r = 0;
    MatZ eta;              // quadratic form on R^(p+1, r+1)
    MatK b_form;           // x_1^2 + ... + x_p^2 - sqrt2 (x_{p+1}^2 + ...)
    GibData gib;           // on R^(p+r) + R^(p+r)
    MatZ strict_witness;   // delta of the fundamental unit 1 + sqrt 2
    QuadElem lambda;       // (2 + sqrt 2)/2
    std::vector<ScalingVariant> scaling_variants;
};

SopqBundle build_sopq(long p, long r);

// generator families; every one satisfies g^T eta g = eta exactly
MatK sopq_unipotent(long p, long r, const std::vector<QuadElem>& v);
MatK sopq_dilation(long p, long r, const QuadElem& lambda);
MatK sopq_so_embed(long p, long r, const MatK& a);

}  // namespace gib
