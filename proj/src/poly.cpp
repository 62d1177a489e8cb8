#include "gib/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gib {

namespace detail {
// modular factorization for degree > 8 (factor_modular.cpp)
std::vector<std::vector<Int>> factor_squarefree_modular(const std::vector<Int>& p);
}  // namespace detail

PolyQ poly_from_ints(const std::vector<long>& v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return PolyQ(std::move(c));
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ f = a, g = b;
    while (!g.is_zero()) {
        PolyQ r = divmod(f, g).second;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return f.monic();
}

bool is_squarefree_poly(const PolyQ& p) {
    if (p.is_zero()) return false;
    return poly_gcd(p, p.derivative()).degree() <= 0;
}

PolyQ squarefree_part(const PolyQ& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero");
    if (p.degree() == 0) return PolyQ::constant(Rat(1));
    PolyQ g = poly_gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<PolyQ, int>> out;
    if (p.degree() == 0) return out;
    // Yun
    PolyQ f = p.monic();
    PolyQ df = f.derivative();
    PolyQ a = poly_gcd(f, df);
    PolyQ b = divmod(f, a).first;
    PolyQ c = divmod(df, a).first;
    PolyQ d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        PolyQ s = poly_gcd(b, d);
        if (s.degree() > 0) out.emplace_back(s, i);
        b = divmod(b, s).first;
        c = divmod(d, s).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::pair<Rat, std::vector<Int>> primitive_integer_parts(const PolyQ& p) {
    if (p.is_zero()) return {Rat(0), {}};
    Int den = 1;
    for (const auto& x : p.c) {
        Int d = x.get_den();
        den = den / gcd_int(den, d) * d;
    }
    std::vector<Int> v;
    v.reserve(p.c.size());
    Int content = 0;
    for (const auto& x : p.c) {
        Int n = x.get_num() * (den / x.get_den());
        content = gcd_int(content, n);
        v.push_back(n);
    }
    if (content == 0) content = 1;
    int lead_sign = sgn(v.back());
    if (lead_sign < 0) content = -content;
    for (auto& x : v) x /= content;
    return {make_rat(content, den), v};
}

PolyQ exact_div_poly(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = divmod(a, b);
    assert(r.is_zero() && "non-exact polynomial division");
    return q;
}

PolyQ subst_x_squared(const PolyQ& p) {
    if (p.is_zero()) return p;
    std::vector<Rat> r(2 * p.c.size() - 1, Rat(0));
    for (size_t i = 0; i < p.c.size(); ++i) r[2 * i] = p.c[i];
    return PolyQ(std::move(r));
}

PolyQ squares_resolvent(const PolyQ& p) {
    if (p.is_zero()) throw std::invalid_argument("squares_resolvent of zero");
    PolyQ f = p.monic();
    int n = f.degree();
    std::vector<Rat> even, odd;
    for (int i = 0; i <= n; ++i) {
        if (i % 2 == 0)
            even.push_back(f.c[i]);
        else
            odd.push_back(f.c[i]);
    }
    PolyQ E{std::vector<Rat>(even)}, O{std::vector<Rat>(odd)};
    PolyQ q = E * E - PolyQ::x() * O * O;  // = (-1)^n prod (y - a_i^2)
    if (n % 2 == 1) q = -q;
    return q;
}

bool poly_less(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

std::string to_string(const PolyQ& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += rat_string(p.c[i]);
        if (i > 0) s += "*x^" + std::to_string(i);
    }
    return s;
}

// ---------------------------------------------------------------------------
// factorization
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<Int>;  // constant first, no trailing zeros

void znormalize(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int zeval(const ZPoly& p, const Int& x) {
    Int r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

PolyQ zpoly_to_q(const ZPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.size());
    for (const auto& x : p) c.emplace_back(x);
    return PolyQ(std::move(c));
}

// --- arithmetic mod a small prime ---

using MPoly = std::vector<long>;

void mnormalize(MPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

MPoly mreduce(const ZPoly& p, long q) {
    MPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        Int m = p[i] % q;
        if (m < 0) m += q;
        r[i] = m.get_si();
    }
    mnormalize(r);
    return r;
}

long mmul(long a, long b, long q) { return static_cast<long>(__int128(a) * b % q); }

long minv(long a, long q) {
    long t = 0, nt = 1, r = q, nr = a % q;
    while (nr != 0) {
        long qq = r / nr;
        t -= qq * nt;
        std::swap(t, nt);
        r -= qq * nr;
        std::swap(r, nr);
    }
    return t < 0 ? t + q : t;
}

MPoly mmul_poly(const MPoly& a, const MPoly& b, long q) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mmul(a[i], b[j], q)) % q;
    }
    mnormalize(r);
    return r;
}

MPoly mmod_poly(MPoly a, const MPoly& b, long q) {
    long inv_lead = minv(b.back(), q);
    while (a.size() >= b.size()) {
        long f = mmul(a.back(), inv_lead, q);
        size_t k = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            a[i + k] = (a[i + k] - mmul(f, b[i], q)) % q;
            if (a[i + k] < 0) a[i + k] += q;
        }
        mnormalize(a);
        if (a.empty()) break;
    }
    return a;
}

MPoly mgcd(MPoly a, MPoly b, long q) {
    while (!b.empty()) {
        MPoly r = mmod_poly(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = minv(a.back(), q);
        for (auto& x : a) x = mmul(x, inv, q);
    }
    return a;
}

MPoly mpow_poly_mod(MPoly g, long e, const MPoly& f, long q) {
    MPoly r{1};
    while (e > 0) {
        if (e & 1) r = mmod_poly(mmul_poly(r, g, q), f, q);
        g = mmod_poly(mmul_poly(g, g, q), f, q);
        e >>= 1;
    }
    return r;
}

MPoly mderiv(const MPoly& p, long q) {
    if (p.size() <= 1) return {};
    MPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = (static_cast<long>(i % q) * p[i]) % q;
    mnormalize(r);
    return r;
}

// degrees (with multiplicity) of the irreducible factors of f mod q,
// or empty if f mod q is unusable (degree drop or not squarefree)
std::vector<int> mod_degree_pattern(const ZPoly& f, long q) {
    MPoly g = mreduce(f, q);
    if (static_cast<int>(g.size()) != static_cast<int>(f.size())) return {};
    if (mgcd(g, mderiv(g, q), q).size() > 1) return {};
    // distinct-degree factorization, degrees only
    long inv = minv(g.back(), q);
    for (auto& x : g) x = mmul(x, inv, q);
    std::vector<int> degs;
    MPoly h{0, 1};  // x^(q^i) mod g, incrementally
    h = mmod_poly(h, g, q);
    MPoly cur = g;
    int i = 0;
    while (static_cast<int>(cur.size()) - 1 > 0) {
        ++i;
        if (2 * i > static_cast<int>(cur.size()) - 1) {
            degs.push_back(static_cast<int>(cur.size()) - 1);
            break;
        }
        h = mpow_poly_mod(h, q, cur.empty() ? g : cur, q);
        MPoly diff = h;
        // subtract x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] - 1) % q;
        if (diff[1] < 0) diff[1] += q;
        mnormalize(diff);
        MPoly d = mgcd(cur, diff, q);
        if (d.size() > 1) {
            int total = static_cast<int>(d.size()) - 1;
            for (int k = 0; k < total / i; ++k) degs.push_back(i);
            MPoly quo_rem;
            // divide cur by d
            MPoly quo;
            {
                MPoly a = cur;
                long il = minv(d.back(), q);
                quo.assign(a.size() - d.size() + 1, 0);
                while (a.size() >= d.size()) {
                    long fq = mmul(a.back(), il, q);
                    size_t k2 = a.size() - d.size();
                    quo[k2] = fq;
                    for (size_t j = 0; j < d.size(); ++j) {
                        a[j + k2] = (a[j + k2] - mmul(fq, d[j], q)) % q;
                        if (a[j + k2] < 0) a[j + k2] += q;
                    }
                    mnormalize(a);
                    if (a.empty()) break;
                }
            }
            cur = quo;
            mnormalize(cur);
            h = mmod_poly(h, cur.size() > 1 ? cur : g, q);
            if (cur.size() <= 1) break;
        }
    }
    return degs;
}

std::set<int> attainable_degrees(const std::vector<int>& parts) {
    std::set<int> sums{0};
    for (int p : parts) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + p);
        sums = std::move(next);
    }
    return sums;
}

std::vector<Int> divisors_of(const Int& n) {
    Int a = abs_int(n);
    assert(a > 0);
    std::vector<Int> small, large;
    for (Int i = 1; i * i <= a; ++i) {
        if (a % i == 0) {
            small.push_back(i);
            if (i * i != a) large.push_back(a / i);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

Int binom(int n, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Landau-Mignotte style coefficient bound for degree-m integer factors of P
Int factor_coeff_bound(const ZPoly& P, int m) {
    Int norm2_sq = 0;
    for (const auto& x : P) norm2_sq += x * x;
    Int norm2 = isqrt(norm2_sq) + 1;
    return binom(m, m / 2) * (norm2 + abs_int(P.back()));
}

// exact division test of primitive integer polynomials
bool zdivides(const ZPoly& g, const ZPoly& P, ZPoly* quotient) {
    // rational division then integrality check
    PolyQ q = zpoly_to_q(P), d = zpoly_to_q(g);
    auto [quo, rem] = divmod(q, d);
    if (!rem.is_zero()) return false;
    ZPoly out;
    out.reserve(quo.c.size());
    for (const auto& x : quo.c) {
        if (!is_integer(x)) return false;
        out.push_back(x.get_num());
    }
    if (quotient) *quotient = std::move(out);
    return true;
}

// one integer factor of primitive squarefree P (degree >= 2, no rational
// roots) of degree m, by interpolation through small integer points whose
// values divide the values of P; nullopt if none exists
std::optional<ZPoly> search_factor_degree_m(const ZPoly& P, int m) {
    assert(m >= 2 && 2 * m <= static_cast<int>(P.size()));
    std::vector<Int> pts;
    for (long k = 0; static_cast<int>(pts.size()) < m + 1; ++k) {
        pts.push_back(k == 0 ? Int(0) : (k % 2 == 1 ? Int((k + 1) / 2) : Int(-(k / 2))));
    }
    std::vector<std::vector<Int>> choices(m + 1);
    for (int j = 0; j <= m; ++j) {
        Int v = zeval(P, pts[j]);
        assert(v != 0);  // rational roots were stripped
        for (const auto& dvs : divisors_of(v)) {
            choices[j].push_back(dvs);
            choices[j].push_back(-dvs);
        }
    }
    Int bound = factor_coeff_bound(P, m);
    // precompute the Lagrange basis polynomials over Q
    std::vector<std::vector<Rat>> lag(m + 1);
    for (int j = 0; j <= m; ++j) {
        std::vector<Rat> basis{Rat(1)};
        Int denom = 1;
        for (int i = 0; i <= m; ++i) {
            if (i == j) continue;
            denom *= pts[j] - pts[i];
            std::vector<Rat> nb(basis.size() + 1, Rat(0));
            for (size_t t = 0; t < basis.size(); ++t) {
                nb[t + 1] += basis[t];
                nb[t] -= Rat(pts[i]) * basis[t];
            }
            basis = std::move(nb);
        }
        Rat inv = make_rat(Int(1), denom);
        for (auto& x : basis) x *= inv;
        lag[j] = std::move(basis);
    }

    std::vector<size_t> idx(m + 1, 0);
    std::vector<Int> w(m + 1);
    while (true) {
        for (int j = 0; j <= m; ++j) w[j] = choices[j][idx[j]];
        // candidate values at 1 and -1 must agree mod 2
        bool ok = (w[1] - w[2]) % 2 == 0;
        if (ok) {
            std::vector<Rat> q(m + 1, Rat(0));
            for (int j = 0; j <= m; ++j) {
                Rat wj{w[j]};
                for (int t = 0; t <= m; ++t) q[t] += wj * lag[j][t];
            }
            ok = q[m] != 0;
            ZPoly g;
            if (ok) {
                for (const auto& x : q) {
                    if (!is_integer(x) || abs_int(x.get_num()) > bound) {
                        ok = false;
                        break;
                    }
                    g.push_back(x.get_num());
                }
            }
            if (ok && zdivides(g, P, nullptr)) return g;
        }
        // next tuple
        int j = 0;
        while (j <= m) {
            if (++idx[j] < choices[j].size()) break;
            idx[j] = 0;
            ++j;
        }
        if (j > m) return std::nullopt;
    }
}

void factor_primitive_squarefree(ZPoly P, std::vector<PolyQ>& out) {
    znormalize(P);
    if (static_cast<int>(P.size()) - 1 <= 0) return;

    // powers of x
    size_t zeros = 0;
    while (zeros < P.size() && P[zeros] == 0) ++zeros;
    if (zeros > 0) {
        assert(zeros == 1);  // squarefree input
        out.push_back(PolyQ::x());
        P.erase(P.begin(), P.begin() + zeros);
        factor_primitive_squarefree(P, out);
        return;
    }

    // rational roots u/v with u | P(0), v | lead(P)
    for (bool found = true; found && P.size() > 1;) {
        found = false;
        for (const auto& u : divisors_of(P[0])) {
            for (const auto& v : divisors_of(P.back())) {
                if (gcd_int(u, v) != 1) continue;
                for (int s : {1, -1}) {
                    Rat root = make_rat(s * u, v);
                    PolyQ q = zpoly_to_q(P);
                    if (q(root) == 0) {
                        PolyQ lin{std::vector<Rat>{-root, Rat(1)}};
                        out.push_back(lin);
                        auto [quo, rem] = divmod(q, lin);
                        assert(rem.is_zero());
                        P = primitive_integer_parts(quo).second;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    int n = static_cast<int>(P.size()) - 1;
    if (n <= 0) return;
    if (n <= 3) {  // no rational roots left
        out.push_back(zpoly_to_q(P).monic());
        return;
    }

    // degree patterns modulo small primes
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
    std::set<int> candidates;
    for (int i = 1; i < n; ++i) candidates.insert(i);
    int used = 0;
    for (long q : primes) {
        if (P.back() % q == 0) continue;
        auto pattern = mod_degree_pattern(P, q);
        if (pattern.empty()) continue;
        auto att = attainable_degrees(pattern);
        for (auto it = candidates.begin(); it != candidates.end();) {
            if (!att.count(*it))
                it = candidates.erase(it);
            else
                ++it;
        }
        if (++used >= 6 || candidates.empty()) break;
    }
    if (candidates.empty()) {  // irreducible certificate
        out.push_back(zpoly_to_q(P).monic());
        return;
    }

    if (n > 8) {
        // beyond the bounded-search envelope: modular factorization with
        // Hensel lifting (the elimination resultants land here)
        for (const auto& f : detail::factor_squarefree_modular(P))
            out.push_back(zpoly_to_q(f).monic());
        return;
    }

    // bounded search over the surviving degrees, smallest first
    std::set<int> to_try;
    for (int m : candidates) {
        int mm = std::min(m, n - m);
        if (mm >= 2 && mm <= n / 2) to_try.insert(mm);
    }
    for (int mm : to_try) {
        if (auto g = search_factor_degree_m(P, mm)) {
            ZPoly quo;
            bool ok = zdivides(*g, P, &quo);
            assert(ok);
            (void)ok;
            factor_primitive_squarefree(*g, out);
            factor_primitive_squarefree(quo, out);
            return;
        }
    }
    out.push_back(zpoly_to_q(P).monic());
}

}  // namespace

std::vector<std::pair<PolyQ, int>> factor_poly_q(const PolyQ& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    std::vector<std::pair<PolyQ, int>> out;
    if (p.degree() == 0) return out;
    for (const auto& [sqf, mult] : squarefree_decomposition(p)) {
        auto P = primitive_integer_parts(sqf).second;
        std::vector<PolyQ> factors;
        factor_primitive_squarefree(P, factors);
        for (auto& f : factors) out.emplace_back(std::move(f), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return poly_less(x.first, y.first);
        return x.second < y.second;
    });
    // merge equal factors (can arise only through distinct multiplicities)
    std::vector<std::pair<PolyQ, int>> merged;
    for (auto& fm : out) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(std::move(fm));
    }
    return merged;
}

bool is_irreducible(const PolyQ& p) {
    if (p.degree() <= 0) return false;
    auto f = factor_poly_q(p);
    return f.size() == 1 && f[0].second == 1;
}

}  // namespace gib
