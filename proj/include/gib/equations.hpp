#pragma once

#include "gib/gibdata.hpp"

namespace gib {

// Rational matrices cutting out the Zariski closure of the isometric part of
// the automorphism group: commutation with every A_i pins the splitting,
// preservation of every Q_i pins the form. The K-linear combinations
// p = sum alpha_i A_i (projector onto H along V) and q = sum beta_i Q_i
// (b extended by zero on V) are carried along for the twisted mode.
struct EquationSet {
    size_t n = 0;
    long d = 0;
    size_t dim_h = 0;
    std::vector<MatQ> commute_mats;        // the A_i, primitive integer form
    std::vector<QuadElem> commute_coeffs;  // alpha_i, Q-linearly independent
    std::vector<MatQ> form_mats;           // the Q_i, symmetric
    std::vector<QuadElem> form_coeffs;     // beta_i
    MatK projector;                        // p over K
    MatK form;                             // q over K
};

enum class EqMode { isometry, det_twisted };

EquationSet zariski_equations(const GibData& data);

// isometry: [A_i, M] = 0 and M^T Q_i M = Q_i for all i.
// det_twisted: [A_i, M] = 0 and M^T q M = rho q with rho^(dim H) equal to
// det(M|_H)^2, the determinant-normalized similarity condition.
bool equations_satisfied(const MatZ& m, const EquationSet& eqs, EqMode mode);

}  // namespace gib
