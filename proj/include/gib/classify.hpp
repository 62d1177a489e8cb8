#pragma once

#include "gib/blocks.hpp"
#include "gib/gibdata.hpp"
#include "gib/moduli.hpp"

namespace gib {

struct LambdaClassRef {
    size_t group = 0;        // index into the decomposition's groups
    size_t class_index = 0;  // index into that group's eigenvalue classes
};

// One admissible similarity ratio shared by every block, with the canonical
// splitting it induces (F_a taken as the full multiplicity factor).
struct ClassificationCandidate {
    RealAlgebraic modulus_sq;
    RealAlgebraic modulus;
    std::optional<QuadElem> modulus_exact;  // present when quadratic over Q
    std::vector<LambdaClassRef> lambda_classes;
    size_t dim_h = 0;

    // exact emission, available when every contributing class is a real
    // eigenvalue over one shared quadratic field
    std::optional<GibData> gib;
    std::optional<AutReport> witness;  // the input checked against `gib`

    // certified enclosures of an H-basis for the remaining cases (columns);
    // membership checks on such data go through the equation route rather
    // than direct basis arithmetic
    std::vector<std::vector<IntervalQ>> h_enclosures;
    std::string note;
};

struct ClassificationReport {
    std::optional<BlockDecomposition> decomposition;
    std::optional<BlockObstruction> obstruction;
    std::vector<std::vector<EigenvalueClass>> group_classes;  // per group
    std::vector<ClassificationCandidate> candidates;          // ascending modulus
    std::string refusal;  // nonempty iff no candidate was produced

    bool accepted() const { return refusal.empty(); }
};

// Block-decomposes a GL(n, Z) matrix, groups blocks by characteristic
// polynomial, intersects the eigenvalue moduli over all blocks, and emits
// canonical GIB data for every shared modulus != 1.
ClassificationReport classify_similarity(const MatZ& a);

// positive square root of a positive real algebraic number
RealAlgebraic algebraic_sqrt(const RealAlgebraic& x);

// quadratic-field value of a degree <= 2 real algebraic number, if any
std::optional<QuadElem> as_quad_elem(const RealAlgebraic& x);

}  // namespace gib
