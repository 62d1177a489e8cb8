#include "gib/quad.hpp"

#include <cassert>
#include <cmath>
#include <set>

namespace gib {

namespace {

void check_field_param(long d) {
    static thread_local std::set<long> known;
    if (d == 0 || known.count(d)) return;
    if (d <= 1 || !is_squarefree(d))
        throw std::invalid_argument("field parameter must be squarefree and > 1, got " +
                                    std::to_string(d));
    known.insert(d);
}

}  // namespace

QuadElem::QuadElem(Rat a_, Rat b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
    a.canonicalize();
    b.canonicalize();
    if (b == 0) {
        d = 0;
    } else {
        check_field_param(d);
        if (d == 0) throw std::invalid_argument("irrational part with no field parameter");
    }
}

long common_field(const QuadElem& x, const QuadElem& y) {
    if (x.d == 0) return y.d;
    if (y.d == 0 || x.d == y.d) return x.d;
    throw std::invalid_argument("elements of distinct quadratic fields: d=" +
                                std::to_string(x.d) + " vs d=" + std::to_string(y.d));
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
    long d = common_field(x, y);
    return QuadElem(x.a + y.a, x.b + y.b, d);
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
    long d = common_field(x, y);
    return QuadElem(x.a - y.a, x.b - y.b, d);
}

QuadElem operator-(const QuadElem& x) { return QuadElem(-x.a, -x.b, x.d); }

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    long d = common_field(x, y);
    return QuadElem(x.a * y.a + Rat(d) * x.b * y.b, x.a * y.b + x.b * y.a, d);
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
    if (y.is_zero()) throw std::invalid_argument("division by zero field element");
    long d = common_field(x, y);
    Rat n = y.a * y.a - Rat(d) * y.b * y.b;
    assert(n != 0);  // d squarefree > 1: nonzero elements have nonzero norm
    QuadElem num = x * QuadElem(y.a, -y.b, y.d);
    return QuadElem(num.a / n, num.b / n, d);
}

QuadElem conjugate(const QuadElem& x) { return QuadElem(x.a, -x.b, x.d); }

Rat field_norm(const QuadElem& x) { return x.a * x.a - Rat(x.d) * x.b * x.b; }

Rat field_trace(const QuadElem& x) { return 2 * x.a; }

int real_sign(const QuadElem& x) {
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with d b^2
    Rat lhs = x.a * x.a, rhs = Rat(x.d) * x.b * x.b;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    assert(false && "sqrt(d) rational");
    return 0;
}

QuadElem inverse(const QuadElem& x) { return QuadElem(Rat(1)) / x; }

QuadElem pow(const QuadElem& x, long e) {
    if (e < 0) return pow(inverse(x), -e);
    QuadElem r(Rat(1)), b = x;
    long k = e;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

bool is_integral(const QuadElem& x) {
    if (x.d == 0) return is_integer(x.a);
    Rat a2 = 2 * x.a, b2 = 2 * x.b;
    if (!is_integer(a2) || !is_integer(b2)) return false;
    Int u = a2.get_num(), v = b2.get_num();
    if (x.d % 4 == 1) return (u - v) % 2 == 0;
    return u % 2 == 0 && v % 2 == 0;
}

QuadElem ring_generator(long d) {
    check_field_param(d);
    if (d == 0) throw std::invalid_argument("ring_generator needs a field parameter");
    if (d % 4 == 1) return QuadElem(Rat(1, 2), Rat(1, 2), d);
    return QuadElem(Rat(0), Rat(1), d);
}

std::pair<Int, Int> ring_coordinates(const QuadElem& x, long d) {
    if (x.d != 0 && x.d != d) throw std::invalid_argument("ring_coordinates: field mismatch");
    if (!is_integral(QuadElem(x.a, x.b, x.b == 0 ? d : x.d)))
        throw std::invalid_argument("ring_coordinates of a non-integral element");
    if (d % 4 == 1) {
        Rat v2 = 2 * x.b, u2 = x.a - x.b;
        return {u2.get_num(), v2.get_num()};
    }
    return {x.a.get_num(), x.b.get_num()};
}

QuadElem from_ring_coordinates(const Int& u, const Int& v, long d) {
    QuadElem w = ring_generator(d);
    return QuadElem(Rat(u), Rat(0), 0) + QuadElem(Rat(v)) * w;
}

QuadElem fundamental_unit(long d) {
    check_field_param(d);
    if (d <= 1 || !is_squarefree(d))
        throw std::invalid_argument("fundamental_unit: d must be squarefree and > 1");

    // Expand the reduced surd (P0 + sqrt(d))/Q0 generating the maximal order.
    // Reduced means alpha > 1 and -1 < conj(alpha) < 0, which makes the
    // continued fraction purely periodic; the convergents at the end of the
    // first period give the smallest unit > 1 of Z[alpha].
    Int s = isqrt(Int(d));
    Int P0, Q0;
    if (d % 4 == 1) {
        Q0 = 2;
        P0 = (s % 2 == 1) ? s : s - 1;  // largest odd integer < sqrt(d)
    } else {
        Q0 = 1;
        P0 = s;
    }
    Int P = P0, Q = Q0;
    Int q_prev = 0, q_cur = 1;  // q_{-1}, q_0 after first step below
    Int p_prev = 1, p_cur = 0;
    bool first = true;
    while (true) {
        Int a = (P + s) / Q;
        if (first) {
            p_cur = a;
            q_cur = 1;
            q_prev = 0;
            p_prev = 1;
            first = false;
        } else {
            Int p_next = a * p_cur + p_prev;
            Int q_next = a * q_cur + q_prev;
            p_prev = p_cur;
            p_cur = p_next;
            q_prev = q_cur;
            q_cur = q_next;
        }
        P = a * Q - P;
        Q = (Int(d) - P * P) / Q;
        if (P == P0 && Q == Q0) break;  // period closed
    }
    // unit = q_last * alpha + q_prev with alpha = (P0 + sqrt(d))/Q0
    Rat A = make_rat(q_cur * P0, Q0) + Rat(q_prev);
    Rat B = make_rat(q_cur, Q0);
    QuadElem u(A, B, d);
    Rat n = field_norm(u);
    if (!(n == 1 || n == -1) || !is_integral(u) || real_sign(u - QuadElem(1)) <= 0)
        throw std::logic_error("fundamental unit computation failed for d=" + std::to_string(d));
    return u;
}

std::string to_string(const QuadElem& x) {
    if (x.b == 0) return rat_string(x.a);
    return rat_string(x.a) + " + " + rat_string(x.b) + "*sqrt(" + std::to_string(x.d) + ")";
}

double to_double(const QuadElem& x) {
    return to_double(x.a) + to_double(x.b) * std::sqrt(static_cast<double>(x.d));
}

}  // namespace gib
