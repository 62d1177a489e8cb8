#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "gib/numbers.hpp"
#include "gib/quad.hpp"

namespace gib {

// Dense univariate polynomial, constant term first, no trailing zeros.
// T must be a commutative ring with exact ==; divmod additionally needs
// division by the leading coefficient.
template <class T>
struct PolyT {
    std::vector<T> c;

    PolyT() = default;
    PolyT(int v) {  // constant polynomial, so PolyT can itself act as a ring scalar
        if (v != 0) c.push_back(T(v));
    }
    PolyT(std::initializer_list<T> v) : c(v) { normalize(); }
    explicit PolyT(std::vector<T> v) : c(std::move(v)) { normalize(); }
    static PolyT constant(const T& v) { return PolyT(std::vector<T>{v}); }
    static PolyT x() { return PolyT(std::vector<T>{T(0), T(1)}); }

    void normalize() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const T& lead() const {
        assert(!c.empty());
        return c.back();
    }
    T coeff(size_t i) const { return i < c.size() ? c[i] : T(0); }

    template <class S>
    auto operator()(const S& x) const {
        S r(0);
        for (size_t i = c.size(); i-- > 0;) r = r * x + S(c[i]);
        return r;
    }

    friend bool operator==(const PolyT& p, const PolyT& q) { return p.c == q.c; }
    friend bool operator!=(const PolyT& p, const PolyT& q) { return !(p == q); }

    friend PolyT operator+(const PolyT& p, const PolyT& q) {
        std::vector<T> r(std::max(p.c.size(), q.c.size()), T(0));
        for (size_t i = 0; i < p.c.size(); ++i) r[i] = r[i] + p.c[i];
        for (size_t i = 0; i < q.c.size(); ++i) r[i] = r[i] + q.c[i];
        return PolyT(std::move(r));
    }
    friend PolyT operator-(const PolyT& p, const PolyT& q) {
        std::vector<T> r(std::max(p.c.size(), q.c.size()), T(0));
        for (size_t i = 0; i < p.c.size(); ++i) r[i] = r[i] + p.c[i];
        for (size_t i = 0; i < q.c.size(); ++i) r[i] = r[i] - q.c[i];
        return PolyT(std::move(r));
    }
    friend PolyT operator-(const PolyT& p) {
        std::vector<T> r = p.c;
        for (auto& v : r) v = -v;
        return PolyT(std::move(r));
    }
    friend PolyT operator*(const PolyT& p, const PolyT& q) {
        if (p.is_zero() || q.is_zero()) return PolyT();
        std::vector<T> r(p.c.size() + q.c.size() - 1, T(0));
        for (size_t i = 0; i < p.c.size(); ++i)
            for (size_t j = 0; j < q.c.size(); ++j) r[i + j] = r[i + j] + p.c[i] * q.c[j];
        return PolyT(std::move(r));
    }
    friend PolyT operator*(const T& s, const PolyT& p) {
        std::vector<T> r = p.c;
        for (auto& v : r) v = s * v;
        return PolyT(std::move(r));
    }

    PolyT shifted(size_t k) const {  // multiply by x^k
        if (is_zero()) return PolyT();
        std::vector<T> r(k, T(0));
        r.insert(r.end(), c.begin(), c.end());
        return PolyT(std::move(r));
    }

    PolyT derivative() const {
        if (c.size() <= 1) return PolyT();
        std::vector<T> r(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = T(static_cast<int>(i)) * c[i];
        return PolyT(std::move(r));
    }

    // quotient and remainder; requires exact division by lead(q) in T
    friend std::pair<PolyT, PolyT> divmod(const PolyT& p, const PolyT& q) {
        if (q.is_zero()) throw std::invalid_argument("polynomial division by zero");
        PolyT rem = p;
        if (p.degree() < q.degree()) return {PolyT(), rem};
        std::vector<T> quo(p.degree() - q.degree() + 1, T(0));
        while (!rem.is_zero() && rem.degree() >= q.degree()) {
            T f = rem.lead() / q.lead();
            int k = rem.degree() - q.degree();
            quo[k] = f;
            for (int i = 0; i <= q.degree(); ++i)
                rem.c[i + k] = rem.c[i + k] - f * q.c[i];
            rem.normalize();
        }
        return {PolyT(std::move(quo)), rem};
    }

    PolyT monic() const {
        assert(!is_zero());
        T inv_lead = T(1) / lead();
        return inv_lead * *this;
    }
};

using PolyQ = PolyT<Rat>;
using PolyK = PolyT<QuadElem>;

PolyQ poly_from_ints(const std::vector<long>& v);

// monic gcd over Q; gcd(0,0) = 0
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

bool is_squarefree_poly(const PolyQ& p);

// p / gcd(p, p'), monic
PolyQ squarefree_part(const PolyQ& p);

// Yun decomposition: list of (monic squarefree factor, multiplicity),
// multiplicities strictly increasing; product of f^m times a constant is p.
std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p);

// Monic irreducible factors over Q with multiplicities, deterministically
// ordered (degree, then coefficient order). p times 1/lc equals the product.
// Irreducibility certificates come from factorization degree patterns modulo
// small primes; the fallback is a bounded integer factor search.
std::vector<std::pair<PolyQ, int>> factor_poly_q(const PolyQ& p);

bool is_irreducible(const PolyQ& p);

// substitute x^2 for x: returns p(x^2)
PolyQ subst_x_squared(const PolyQ& p);

// monic polynomial whose roots are the squares of the roots of monic p
PolyQ squares_resolvent(const PolyQ& p);

// deterministic order: by degree, then lexicographic on coefficients
bool poly_less(const PolyQ& a, const PolyQ& b);

std::string to_string(const PolyQ& p);

// integer-coefficient content-free image: (c, P) with p = c * P, P primitive
std::pair<Rat, std::vector<Int>> primitive_integer_parts(const PolyQ& p);

// Determinant by fraction-free elimination; Div(a, b) must return the exact
// quotient a/b in T. Works over any integral domain.
template <class T, class Div>
T bareiss_det(std::vector<std::vector<T>> m, Div div) {
    size_t n = m.size();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == T(0)) ++piv;
        if (piv == n) return T(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// resultant of two polynomials whose coefficients live in the ring S (itself
// with exact division div), via the Sylvester determinant
template <class S, class Div>
S sylvester_resultant(const PolyT<S>& a, const PolyT<S>& b, Div div) {
    int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return S(0);
    size_t n = static_cast<size_t>(da + db);
    if (n == 0) return S(1);
    std::vector<std::vector<S>> m(n, std::vector<S>(n, S(0)));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) m[i][i + j] = a.c[da - j];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) m[db + i][i + j] = b.c[db - j];
    return bareiss_det(std::move(m), div);
}

inline Rat exact_div_rat(const Rat& a, const Rat& b) { return a / b; }

PolyQ exact_div_poly(const PolyQ& a, const PolyQ& b);

}  // namespace gib
