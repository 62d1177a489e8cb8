#pragma once

#include <string>
#include <vector>

#include "gib/poly.hpp"

namespace gib {

// closed interval with rational endpoints
struct IntervalQ {
    Rat lo, hi;

    IntervalQ() : lo(0), hi(0) {}
    IntervalQ(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("inverted interval");
    }
    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    // +1 / -1 when the sign is decided, 0 when the interval straddles zero
    int sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }
};

IntervalQ operator+(const IntervalQ& x, const IntervalQ& y);
IntervalQ operator-(const IntervalQ& x, const IntervalQ& y);
IntervalQ operator*(const IntervalQ& x, const IntervalQ& y);

IntervalQ interval_eval(const PolyQ& p, const IntervalQ& x);

// Real root of an irreducible polynomial, isolated by an open interval whose
// endpoints are not roots.
struct RealAlgebraic {
    PolyQ minpoly;  // monic irreducible over Q
    Rat lo, hi;

    RealAlgebraic() : minpoly{std::vector<Rat>{Rat(0), Rat(1)}}, lo(-1), hi(1) {}
    explicit RealAlgebraic(const Rat& r);
    RealAlgebraic(PolyQ f, Rat lo_, Rat hi_);  // validates the isolation

    bool is_rational() const { return minpoly.degree() == 1; }
    Rat rational_value() const;  // requires is_rational
    IntervalQ interval() const { return IntervalQ(lo, hi); }
};

std::vector<PolyQ> sturm_sequence(const PolyQ& p);
int sign_variations_at(const std::vector<PolyQ>& seq, const Rat& x);
// number of distinct real roots in (a, b]; requires p(a) != 0
int count_roots_in(const std::vector<PolyQ>& seq, const Rat& a, const Rat& b);
int count_real_roots(const PolyQ& p);

// All real roots of squarefree p, ascending, with pairwise disjoint
// isolating intervals; rejects non-squarefree input.
std::vector<RealAlgebraic> isolate_real_roots(const PolyQ& p);

// halve the isolating interval (at least) until its width is below `width`
void refine_below(RealAlgebraic& x, const Rat& width);
void refine_step(RealAlgebraic& x);

int compare(const RealAlgebraic& x, const RealAlgebraic& y);
int compare_rat(const RealAlgebraic& x, const Rat& r);
inline bool operator==(const RealAlgebraic& x, const RealAlgebraic& y) {
    return compare(x, y) == 0;
}
inline bool operator<(const RealAlgebraic& x, const RealAlgebraic& y) {
    return compare(x, y) < 0;
}

int sign_of(const RealAlgebraic& x);

// exact sign of f at the algebraic point (0 iff minpoly divides f)
int sign_at(const PolyQ& f, const RealAlgebraic& x);

// the algebraic number x^2
RealAlgebraic square(const RealAlgebraic& x);

// embeds a quadratic field element as a real algebraic number
RealAlgebraic to_real_algebraic(const QuadElem& x);

// Compares |x| and |y| for real algebraic x, y (moduli of real roots).
// Moduli of complex roots enter through gib::eigenvalue_classes.
int compare_moduli(const RealAlgebraic& x, const RealAlgebraic& y);

double to_double(const RealAlgebraic& x);
std::string to_string(const RealAlgebraic& x);

}  // namespace gib
