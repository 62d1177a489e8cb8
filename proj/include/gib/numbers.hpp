#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace gib {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// p/q in lowest terms, q > 0.
inline Rat make_rat(const Int& p, const Int& q) {
    if (q == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("0^negative");
        return pow_rat(Rat(base.get_den(), base.get_num()), -e);
    }
    Rat r = 1;
    Rat b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// d > 1 and not divisible by any square > 1
bool is_squarefree(long d);

// "p/q" or "p"; returns nothing on malformed input
std::optional<Rat> parse_rat(const std::string& s);

// canonical "p/q" (denominator always present)
std::string rat_string(const Rat& x);

// round-to-nearest double, for diagnostics and sanity cross-checks only
inline double to_double(const Rat& x) { return x.get_d(); }

// Bounds a <= sqrt(x) <= b with rational endpoints, within 2^-prec_bits.
// Requires x >= 0.
std::pair<Rat, Rat> sqrt_bounds(const Rat& x, unsigned prec_bits);

}  // namespace gib
