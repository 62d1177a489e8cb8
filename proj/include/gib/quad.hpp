#pragma once

#include <string>

#include "gib/numbers.hpp"

namespace gib {

// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)), evaluated
// under the embedding sending sqrt(d) to the positive real root.
//
// d == 0 marks a plain rational value (b is then 0); such values mix freely
// with any field. Nonzero d must be squarefree and > 1, and two elements
// with nonzero d interoperate only if their d agree.
struct QuadElem {
    Rat a;
    Rat b;
    long d = 0;

    QuadElem() : a(0), b(0), d(0) {}
    QuadElem(int v) : a(v), b(0), d(0) {}
    QuadElem(const Int& v) : a(v), b(0), d(0) {}
    QuadElem(const Rat& v) : a(v), b(0), d(0) {}
    QuadElem(Rat a_, Rat b_, long d_);

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.a == y.a && x.b == y.b && (x.b == 0 || x.d == y.d);
    }
    friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }
};

// shared field parameter of two operands, throwing on a genuine mismatch
long common_field(const QuadElem& x, const QuadElem& y);

QuadElem operator+(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x);
QuadElem operator*(const QuadElem& x, const QuadElem& y);
QuadElem operator/(const QuadElem& x, const QuadElem& y);

inline QuadElem& operator+=(QuadElem& x, const QuadElem& y) { return x = x + y; }
inline QuadElem& operator-=(QuadElem& x, const QuadElem& y) { return x = x - y; }
inline QuadElem& operator*=(QuadElem& x, const QuadElem& y) { return x = x * y; }
inline QuadElem& operator/=(QuadElem& x, const QuadElem& y) { return x = x / y; }

// Galois conjugate a - b*sqrt(d); involution fixing the rationals.
QuadElem conjugate(const QuadElem& x);

// x * conjugate(x) = a^2 - d b^2
Rat field_norm(const QuadElem& x);

Rat field_trace(const QuadElem& x);

// Exact sign of a + b*sqrt(d) as a real number, by integer arithmetic only.
int real_sign(const QuadElem& x);

inline bool operator<(const QuadElem& x, const QuadElem& y) { return real_sign(x - y) < 0; }
inline bool operator>(const QuadElem& x, const QuadElem& y) { return real_sign(x - y) > 0; }

QuadElem inverse(const QuadElem& x);
QuadElem pow(const QuadElem& x, long e);

// Membership in the ring of integers of Q(sqrt(d)): Z-span of {1, w} with
// w = (1+sqrt(d))/2 when d = 1 mod 4, w = sqrt(d) otherwise.
bool is_integral(const QuadElem& x);

// w as above, for the field of x (requires d != 0)
QuadElem ring_generator(long d);

// Coordinates (u, v) with x = u + v*w, defined for integral x.
std::pair<Int, Int> ring_coordinates(const QuadElem& x, long d);

QuadElem from_ring_coordinates(const Int& u, const Int& v, long d);

// Smallest unit > 1 of the ring of integers of Q(sqrt(d)); its norm is +-1.
// Computed from the continued fraction of a reduced quadratic surd.
QuadElem fundamental_unit(long d);

std::string to_string(const QuadElem& x);

double to_double(const QuadElem& x);

}  // namespace gib
