#pragma once

#include <vector>

#include "gib/realalg.hpp"

namespace gib {

// One Galois-stable class of eigenvalues of an irreducible rational
// polynomial: a single real root, or a complex-conjugate pair.
struct EigenvalueClass {
    bool is_real = true;
    RealAlgebraic value;       // the eigenvalue itself (real case only)
    RealAlgebraic modulus_sq;  // |a|^2, exact in both cases
    IntervalQ re, im;          // certified enclosures; im = 0 for real classes

    int dim() const { return is_real ? 1 : 2; }
};

// All eigenvalue classes of an irreducible polynomial, sorted by modulus
// (then real classes first). Real roots are isolated directly; moduli of
// complex pairs are cut out of the resultant of the two remainder
// coefficients of p modulo x^2 - c x + m, eliminating c.
std::vector<EigenvalueClass> eigenvalue_classes(const PolyQ& irreducible);

// distinct modulus-squared values with total eigenvalue-class dimensions
struct ModulusClass {
    RealAlgebraic modulus_sq;
    int total_dim = 0;  // sum of dims of eigenvalue classes at this modulus
};
std::vector<ModulusClass> modulus_classes(const PolyQ& irreducible);

}  // namespace gib
