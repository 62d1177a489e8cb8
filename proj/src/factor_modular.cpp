// Modular factorization for large-degree inputs: Berlekamp over a small
// prime, Hensel lifting past the Mignotte bound, then subset recombination.
// The elimination resultants behind the eigenvalue-modulus machinery reach
// degrees in the twenties, where the bounded integer factor search is no
// longer viable.

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>

#include "gib/poly.hpp"

namespace gib {

namespace detail {

using ZPoly = std::vector<Int>;   // constant first, normalized
using MPoly = std::vector<long>;  // coefficients mod a small prime

namespace {

void znorm(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void mnorm(MPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
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

MPoly mreduce(const ZPoly& p, long q) {
    MPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        Int m = p[i] % q;
        if (m < 0) m += q;
        r[i] = m.get_si();
    }
    mnorm(r);
    return r;
}

MPoly mmul_poly(const MPoly& a, const MPoly& b, long q) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mmul(a[i], b[j], q)) % q;
    }
    mnorm(r);
    return r;
}

std::pair<MPoly, MPoly> mdivmod(MPoly a, const MPoly& b, long q) {
    long il = minv(b.back(), q);
    MPoly quo;
    if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size()) {
        long f = mmul(a.back(), il, q);
        size_t k = a.size() - b.size();
        quo[k] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            a[i + k] = (a[i + k] - mmul(f, b[i], q)) % q;
            if (a[i + k] < 0) a[i + k] += q;
        }
        mnorm(a);
        if (a.empty()) break;
    }
    return {quo, a};
}

MPoly mgcd(MPoly a, MPoly b, long q) {
    while (!b.empty()) {
        MPoly r = mdivmod(a, b, q).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long il = minv(a.back(), q);
        for (auto& x : a) x = mmul(x, il, q);
    }
    return a;
}

MPoly mmonic(MPoly a, long q) {
    if (a.empty()) return a;
    long il = minv(a.back(), q);
    for (auto& x : a) x = mmul(x, il, q);
    return a;
}

MPoly mderiv(const MPoly& p, long q) {
    if (p.size() <= 1) return {};
    MPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = (static_cast<long>(i % q) * p[i]) % q;
    mnorm(r);
    return r;
}

// x^e mod f
MPoly mxpow(long e, const MPoly& f, long q) {
    MPoly base{0, 1};
    if (base.size() >= f.size()) base = mdivmod(base, f, q).second;
    MPoly r{1};
    while (e > 0) {
        if (e & 1) r = mdivmod(mmul_poly(r, base, q), f, q).second;
        base = mdivmod(mmul_poly(base, base, q), f, q).second;
        e >>= 1;
    }
    return r;
}

// monic irreducible factors of a monic squarefree polynomial over F_p
std::vector<MPoly> berlekamp(const MPoly& f, long q) {
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    // Frobenius matrix: columns are x^(q i) mod f
    std::vector<MPoly> pow(n);
    MPoly xq = mxpow(q, f, q);
    pow[0] = MPoly{1};
    for (int i = 1; i < n; ++i)
        pow[i] = mdivmod(mmul_poly(pow[i - 1], xq, q), f, q).second;
    // kernel of (Q - I) over F_p by Gaussian elimination on rows
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (size_t k = 0; k < pow[i].size(); ++k) m[k][i] = pow[i][k];
        m[i][i] = (m[i][i] - 1 + q) % q;
    }
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = rank;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(m[sel], m[rank]);
        long il = minv(m[rank][col], q);
        for (int j = 0; j < n; ++j) m[rank][j] = mmul(m[rank][j], il, q);
        for (int i = 0; i < n; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            long f2 = m[i][col];
            for (int j = 0; j < n; ++j)
                m[i][j] = ((m[i][j] - mmul(f2, m[rank][j], q)) % q + q) % q;
        }
        pivot_col[rank++] = col;
    }
    std::vector<MPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        MPoly v(n, 0);
        v[j] = 1;
        for (int i = 0; i < rank; ++i)
            if (pivot_col[i] < j) v[pivot_col[i]] = (q - m[i][j]) % q;
        mnorm(v);
        basis.push_back(std::move(v));
    }
    size_t r = basis.size();  // number of irreducible factors
    std::vector<MPoly> factors{f};
    if (r <= 1) return factors;
    for (const auto& v : basis) {
        if (v.size() <= 1) continue;  // constants split nothing
        if (factors.size() >= r) break;
        std::vector<MPoly> next;
        for (const auto& g : factors) {
            if (g.size() <= 2) {  // linear factors are final
                next.push_back(g);
                continue;
            }
            MPoly rem = g;
            bool split = false;
            std::vector<MPoly> pieces;
            for (long s = 0; s < q && rem.size() > 1; ++s) {
                MPoly shifted = v;
                shifted.resize(std::max<size_t>(shifted.size(), 1), 0);
                shifted[0] = ((shifted[0] - s) % q + q) % q;
                mnorm(shifted);
                if (shifted.empty()) continue;
                MPoly d = mgcd(rem, shifted, q);
                if (d.size() > 1 && d.size() < rem.size()) {
                    pieces.push_back(d);
                    rem = mdivmod(rem, d, q).first;
                    mnorm(rem);
                    split = true;
                }
            }
            if (!split) {
                next.push_back(g);
            } else {
                if (rem.size() > 1) pieces.push_back(rem);
                for (auto& piece : pieces) next.push_back(mmonic(piece, q));
            }
        }
        factors = std::move(next);
    }
    return factors;
}

// ---------------------------------------------------------------------------
// arithmetic mod p^k with arbitrary-precision coefficients
// ---------------------------------------------------------------------------

Int symmetric_mod(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly lreduce(const ZPoly& p, const Int& m) {
    ZPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        r[i] = p[i] % m;
        if (r[i] < 0) r[i] += m;
    }
    znorm(r);
    return r;
}

ZPoly lmul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
    }
    for (auto& x : r)
        if (x < 0) x += m;
    znorm(r);
    return r;
}

ZPoly ladd(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    for (auto& x : r) {
        x %= m;
        if (x < 0) x += m;
    }
    znorm(r);
    return r;
}

ZPoly lsub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    for (auto& x : r) {
        x %= m;
        if (x < 0) x += m;
    }
    znorm(r);
    return r;
}

// division by a monic divisor, coefficients mod m
std::pair<ZPoly, ZPoly> ldivmod_monic(ZPoly a, const ZPoly& b, const Int& m) {
    assert(!b.empty() && b.back() == 1);
    ZPoly quo;
    if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, Int(0));
    while (a.size() >= b.size()) {
        Int f = a.back();
        size_t k = a.size() - b.size();
        quo[k] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            a[i + k] = (a[i + k] - f * b[i]) % m;
            if (a[i + k] < 0) a[i + k] += m;
        }
        znorm(a);
        if (a.empty()) break;
    }
    return {quo, a};
}

struct HenselPair {
    ZPoly g, h;  // P = g h mod M, h monic
};

// One quadratic lifting step: from modulus m to m^2 (capped by target).
// Invariants: P = g h (mod m), s g + t h = 1 (mod m), h monic,
// lc(g) = lc(P) mod m.
void hensel_step(const ZPoly& P, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m,
                 const Int& next) {
    ZPoly e = lsub(lreduce(P, next), lmul(g, h, next), next);
    auto [q, r] = ldivmod_monic(lmul(s, e, next), h, next);
    ZPoly g_new = ladd(g, ladd(lmul(t, e, next), lmul(q, g, next), next), next);
    ZPoly h_new = ladd(h, r, next);
    // Bezout update
    ZPoly b = lsub(ladd(lmul(s, g_new, next), lmul(t, h_new, next), next),
                   ZPoly{Int(1)}, next);
    auto [c, d] = ldivmod_monic(lmul(s, b, next), h_new, next);
    ZPoly s_new = lsub(s, d, next);
    ZPoly t_new = lsub(t, ladd(lmul(t, b, next), lmul(c, g_new, next), next), next);
    g = std::move(g_new);
    h = std::move(h_new);
    s = std::move(s_new);
    t = std::move(t_new);
    (void)m;  // the previous modulus is implicit in the inputs
}

// lifts the modular factor list so that P = lc * prod(monic factors) mod M
void hensel_multifactor(const ZPoly& P, std::vector<ZPoly>& factors, long p, const Int& target,
                        size_t lo, size_t hi) {
    if (hi - lo <= 1) return;
    size_t mid = lo + (hi - lo) / 2;
    // g carries the leading coefficient, h is the monic right half
    long q = p;
    MPoly gq{1}, hq{1};
    Int lead = P.back();
    {
        // build the split modulo p
        MPoly prod_l{1}, prod_r{1};
        for (size_t i = lo; i < mid; ++i) prod_l = mmul_poly(prod_l, mreduce(factors[i], q), q);
        for (size_t i = mid; i < hi; ++i) prod_r = mmul_poly(prod_r, mreduce(factors[i], q), q);
        Int lead_mod = lead % q;
        if (lead_mod < 0) lead_mod += q;
        long lm = lead_mod.get_si();
        for (auto& x : prod_l) x = mmul(x, lm, q);
        gq = prod_l;
        hq = prod_r;
    }
    // Bezout pair mod p via extended Euclid
    MPoly s, t;
    {
        MPoly r0 = gq, r1 = hq;
        MPoly s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            auto [qq, rr] = mdivmod(r0, r1, q);
            MPoly s2 = s0, t2 = t0;
            // s2 = s0 - qq*s1, t2 = t0 - qq*t1
            MPoly qs = mmul_poly(qq, s1, q), qt = mmul_poly(qq, t1, q);
            s2.resize(std::max(s2.size(), qs.size()), 0);
            for (size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % q + q) % q;
            mnorm(s2);
            t2.resize(std::max(t2.size(), qt.size()), 0);
            for (size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % q + q) % q;
            mnorm(t2);
            r0 = r1;
            r1 = rr;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        // r0 = gcd = constant (squarefree and coprime halves)
        assert(r0.size() == 1);
        long il = minv(r0[0], q);
        for (auto& x : s0) x = mmul(x, il, q);
        for (auto& x : t0) x = mmul(x, il, q);
        s = s0;
        t = t0;
    }
    auto to_z = [](const MPoly& a) {
        ZPoly r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        return r;
    };
    ZPoly g = to_z(gq), h = to_z(hq), sz = to_z(s), tz = to_z(t);
    Int modulus = q;
    while (modulus < target) {
        Int next = modulus * modulus;  // p-power moduli throughout
        hensel_step(P, g, h, sz, tz, modulus, next);
        modulus = next;
    }
    // recurse: g has the lead, h is monic
    hensel_multifactor(g, factors, p, target, lo, mid);
    hensel_multifactor(h, factors, p, target, mid, hi);
    // write back the lifted single factors when the range is a leaf
    if (mid - lo == 1) factors[lo] = g;  // may be non-monic (carries lc chunk)
    if (hi - mid == 1) factors[mid] = h;
}

Int mignotte_bound(const ZPoly& P) {
    Int norm_sq = 0;
    for (const auto& x : P) norm_sq += x * x;
    int n = static_cast<int>(P.size()) - 1;
    Int binom = 1;
    for (int i = 0; i < n / 2; ++i) binom = binom * (n - i) / (i + 1);
    return binom * (isqrt(norm_sq) + 1 + abs_int(P.back()));
}

}  // namespace

// Full factorization of a primitive squarefree integer polynomial of large
// degree into primitive irreducible integer factors.
std::vector<ZPoly> factor_squarefree_modular(const ZPoly& P0) {
    ZPoly P = P0;
    znorm(P);
    std::vector<ZPoly> out;
    int n = static_cast<int>(P.size()) - 1;
    if (n <= 0) return out;

    // choose a prime keeping P squarefree, preferring few modular factors
    static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    long best_p = 0;
    std::vector<MPoly> best_factors;
    int tried = 0;
    for (long q : primes) {
        if (P.back() % q == 0) continue;
        MPoly f = mreduce(P, q);
        if (static_cast<int>(f.size()) != n + 1) continue;
        if (mgcd(f, mderiv(f, q), q).size() > 1) continue;
        auto factors = berlekamp(mmonic(f, q), q);
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = q;
            best_factors = std::move(factors);
        }
        if (++tried >= 4 || best_factors.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("no usable prime for modular factorization");
    if (best_factors.size() == 1) {
        out.push_back(P);
        return out;
    }
    long p = best_p;

    // lift past twice the Mignotte bound times the leading coefficient
    Int target = 2 * mignotte_bound(P) * abs_int(P.back()) + 1;
    std::vector<ZPoly> lifted(best_factors.size());
    for (size_t i = 0; i < best_factors.size(); ++i) {
        lifted[i].assign(best_factors[i].size(), Int(0));
        for (size_t k = 0; k < best_factors[i].size(); ++k) lifted[i][k] = best_factors[i][k];
    }
    Int modulus = p;
    while (modulus < target) modulus = modulus * modulus;
    hensel_multifactor(P, lifted, p, target, 0, lifted.size());
    // normalize every lifted factor to monic mod modulus (the leaves touched
    // by the lc-carrying side are only correct up to units)
    for (auto& f : lifted) {
        Int il;
        Int lead = f.back() % modulus;
        if (lead < 0) lead += modulus;
        mpz_invert(il.get_mpz_t(), lead.get_mpz_t(), modulus.get_mpz_t());
        for (auto& x : f) {
            x = (x * il) % modulus;
            if (x < 0) x += modulus;
        }
    }

    // subset recombination
    std::vector<int> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), 0);
    ZPoly rest = P;
    auto try_subsets = [&](auto&& self, size_t size) -> bool {
        std::vector<size_t> idx(size);
        std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
            if (pos == size) {
                ZPoly cand{rest.back()};
                for (size_t i = 0; i < size; ++i) cand = lmul(cand, lifted[alive[idx[i]]], modulus);
                for (auto& x : cand) x = symmetric_mod(x, modulus);
                znorm(cand);
                if (cand.empty()) return false;
                // primitive part
                Int content = 0;
                for (const auto& x : cand) content = gcd_int(content, x);
                if (sgn(cand.back()) < 0) content = -content;
                for (auto& x : cand) x /= content;
                // trial division over Q
                std::vector<Rat> cq(cand.size()), rq(rest.size());
                for (size_t i = 0; i < cand.size(); ++i) cq[i] = Rat(cand[i]);
                for (size_t i = 0; i < rest.size(); ++i) rq[i] = Rat(rest[i]);
                auto [quo, rem] = divmod(PolyQ(std::move(rq)), PolyQ(std::move(cq)));
                if (!rem.is_zero()) return false;
                bool integral = true;
                for (const auto& x : quo.c)
                    if (!is_integer(x)) integral = false;
                if (!integral) return false;
                out.push_back(cand);
                ZPoly new_rest(quo.c.size());
                for (size_t i = 0; i < quo.c.size(); ++i) new_rest[i] = quo.c[i].get_num();
                // make primitive
                Int c2 = 0;
                for (const auto& x : new_rest) c2 = gcd_int(c2, x);
                if (sgn(new_rest.back()) < 0) c2 = -c2;
                if (c2 != 0 && c2 != 1)
                    for (auto& x : new_rest) x /= c2;
                rest = std::move(new_rest);
                std::vector<int> next_alive;
                std::vector<bool> used(lifted.size(), false);
                for (size_t i = 0; i < size; ++i) used[alive[idx[i]]] = true;
                for (int a : alive)
                    if (!used[a]) next_alive.push_back(a);
                alive = std::move(next_alive);
                return true;
            }
            for (size_t i = start; i < alive.size(); ++i) {
                idx[pos] = i;
                if (rec(pos + 1, i + 1)) return true;
            }
            return false;
        };
        (void)self;
        return rec(0, 0);
    };
    size_t size = 1;
    while (!alive.empty() && 2 * size <= alive.size()) {
        if (try_subsets(try_subsets, size)) continue;  // retry same size after a hit
        ++size;
    }
    if (!alive.empty()) {
        out.push_back(rest);  // the remaining factors form one irreducible block
    }
    return out;
}

}  // namespace detail

}  // namespace gib
