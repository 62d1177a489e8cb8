#include "gib/moduli.hpp"

#include <algorithm>
#include <cassert>

namespace gib {

namespace {

// ---------------------------------------------------------------------------
// arithmetic in Q(theta), elements as polynomials mod the minimal polynomial
// ---------------------------------------------------------------------------

struct NumberField {
    PolyQ f;              // monic irreducible
    RealAlgebraic theta;  // the designated real root

    explicit NumberField(const RealAlgebraic& t) : f(t.minpoly), theta(t) {}

    PolyQ reduce(const PolyQ& a) const { return divmod(a, f).second; }
    PolyQ mul(const PolyQ& a, const PolyQ& b) const { return reduce(a * b); }

    PolyQ inv(const PolyQ& a) const {
        // extended Euclid: s*a + t*f = const
        PolyQ r0 = f, r1 = reduce(a);
        if (r1.is_zero()) throw std::invalid_argument("inverse of zero field element");
        PolyQ s0, s1 = PolyQ::constant(Rat(1));
        while (true) {
            auto [q, r2] = divmod(r0, r1);
            if (r2.is_zero()) break;
            PolyQ s2 = s0 - q * s1;
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        assert(r1.degree() == 0);
        return reduce(Rat(1) / r1.c[0] * s1);
    }

    int sign(const PolyQ& a) const { return sign_at(a, theta); }

    IntervalQ enclose(const PolyQ& a, const Rat& width) const {
        RealAlgebraic t = theta;
        while (true) {
            IntervalQ v = interval_eval(a, t.interval());
            if (v.width() < width) return v;
            refine_step(t);
        }
    }
};

// polynomials with coefficients in Q(theta)
struct NFPoly {
    std::vector<PolyQ> c;  // constant first, each reduced mod f

    void normalize() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

NFPoly nf_derivative(const NFPoly& p) {
    NFPoly r;
    for (size_t i = 1; i < p.c.size(); ++i) r.c.push_back(Rat(static_cast<long>(i)) * p.c[i]);
    r.normalize();
    return r;
}

NFPoly nf_divmod(const NumberField& K, NFPoly a, const NFPoly& b, NFPoly* quotient) {
    assert(!b.is_zero());
    PolyQ lead_inv = K.inv(b.c.back());
    if (quotient) {
        quotient->c.assign(a.degree() >= b.degree() ? a.c.size() - b.c.size() + 1 : 1, PolyQ());
    }
    while (!a.is_zero() && a.degree() >= b.degree()) {
        PolyQ fac = K.mul(a.c.back(), lead_inv);
        size_t k = a.c.size() - b.c.size();
        if (quotient) quotient->c[k] = fac;
        for (size_t i = 0; i < b.c.size(); ++i) a.c[i + k] = K.reduce(a.c[i + k] - fac * b.c[i]);
        a.normalize();
    }
    if (quotient) quotient->normalize();
    return a;
}

NFPoly nf_gcd(const NumberField& K, NFPoly a, NFPoly b) {
    while (!b.is_zero()) {
        NFPoly r = nf_divmod(K, a, b, nullptr);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        PolyQ inv = K.inv(a.c.back());
        for (auto& x : a.c) x = K.mul(x, inv);
    }
    return a;
}

PolyQ nf_eval(const NumberField& K, const NFPoly& p, const Rat& x) {
    PolyQ r;
    for (size_t i = p.c.size(); i-- > 0;) r = K.reduce(Rat(x) * r + p.c[i]);
    return r;
}

int nf_variations_at(const NumberField& K, const std::vector<NFPoly>& seq, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& p : seq) {
        int s = K.sign(nf_eval(K, p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

std::vector<NFPoly> nf_sturm(const NumberField& K, const NFPoly& p) {
    std::vector<NFPoly> seq{p, nf_derivative(p)};
    if (seq[1].is_zero()) {
        seq.pop_back();
        return seq;
    }
    while (true) {
        NFPoly r = nf_divmod(K, seq[seq.size() - 2], seq[seq.size() - 1], nullptr);
        if (r.is_zero()) break;
        for (auto& x : r.c) x = -x;
        seq.push_back(std::move(r));
    }
    return seq;
}

// real roots of a squarefree NFPoly, as disjoint rational isolating intervals
std::vector<IntervalQ> nf_isolate_roots(const NumberField& K, const NFPoly& g) {
    std::vector<IntervalQ> out;
    if (g.degree() < 1) return out;
    auto seq = nf_sturm(K, g);

    Rat bound = 1;
    {
        unsigned shift = 10;
        IntervalQ lead = K.enclose(g.c.back(), Rat(1, Int(1) << shift));
        while (lead.lo <= 0 && 0 <= lead.hi) {
            if (++shift > 512) throw std::logic_error("zero leading coefficient in nf poly");
            lead = K.enclose(g.c.back(), Rat(1, Int(1) << shift));
        }
        Rat lead_low = std::min(abs(lead.lo), abs(lead.hi));
        Rat s = 0;
        for (int i = 0; i < g.degree(); ++i) {
            IntervalQ ci = K.enclose(g.c[i], Rat(1, 1024));
            s += std::max(abs(ci.lo), abs(ci.hi));
        }
        bound = s / lead_low + 1;
    }
    // a rational endpoint could be a root of g itself; nudge those
    auto safe_point = [&](Rat x) {
        while (K.sign(nf_eval(K, g, x)) == 0) x += Rat(1, 1000003);
        return x;
    };
    auto count_in = [&](const Rat& a, const Rat& b) {
        return nf_variations_at(K, seq, a) - nf_variations_at(K, seq, b);
    };
    struct Seg {
        Rat a, b;
        int n;
    };
    Rat A = safe_point(-bound), B = safe_point(bound);
    std::vector<Seg> work{{A, B, count_in(A, B)}};
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.n <= 0) continue;
        if (s.n == 1) {
            out.emplace_back(s.a, s.b);
            continue;
        }
        Rat mid = safe_point((s.a + s.b) / 2);
        int left = count_in(s.a, mid);
        work.push_back({s.a, mid, left});
        work.push_back({mid, s.b, s.n - left});
    }
    std::sort(out.begin(), out.end(),
              [](const IntervalQ& x, const IntervalQ& y) { return x.lo < y.lo; });
    return out;
}

// shrink an isolating interval of a root of g (signs differ at endpoints)
void nf_refine_root(const NumberField& K, const NFPoly& g, IntervalQ& iv) {
    Rat mid = (iv.lo + iv.hi) / 2;
    int sm = K.sign(nf_eval(K, g, mid));
    if (sm == 0) {
        Rat w = iv.width() / 8;
        iv = IntervalQ(mid - w, mid + w);
        return;
    }
    if (sm == K.sign(nf_eval(K, g, iv.lo)))
        iv = IntervalQ(mid, iv.hi);
    else
        iv = IntervalQ(iv.lo, mid);
}

// ---------------------------------------------------------------------------
// remainder of p modulo x^2 - c x + m, as two coefficients in Q[c, m]
// ---------------------------------------------------------------------------

using BiPoly = PolyT<PolyQ>;  // polynomial in c over Q[m]

std::pair<BiPoly, BiPoly> quadratic_remainder(const PolyQ& p) {
    int n = p.degree();
    std::vector<BiPoly> a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = BiPoly{std::vector<PolyQ>{PolyQ::constant(p.c[i])}};
    PolyQ m_var{std::vector<Rat>{Rat(0), Rat(1)}};
    for (int i = n; i >= 2; --i) {
        if (a[i].is_zero()) continue;
        BiPoly t = a[i];
        a[i - 1] = a[i - 1] + t.shifted(1);  // + c * t
        a[i - 2] = a[i - 2] - m_var * t;     // - m * t
        a[i] = BiPoly();
    }
    return {a[1], a[0]};
}

}  // namespace

std::vector<EigenvalueClass> eigenvalue_classes(const PolyQ& p) {
    if (p.degree() < 1) throw std::invalid_argument("eigenvalue_classes of a constant");
    if (!is_irreducible(p))
        throw std::invalid_argument("eigenvalue_classes expects an irreducible polynomial");
    PolyQ f = p.monic();
    std::vector<EigenvalueClass> out;

    std::vector<RealAlgebraic> real_roots = isolate_real_roots(f);
    for (const auto& r : real_roots) {
        EigenvalueClass cls;
        cls.is_real = true;
        cls.value = r;
        cls.modulus_sq = square(r);
        RealAlgebraic rr = r;
        refine_below(rr, Rat(1, 1 << 16));
        cls.re = rr.interval();
        cls.im = IntervalQ(Rat(0), Rat(0));
        out.push_back(std::move(cls));
    }

    int t = (f.degree() - static_cast<int>(real_roots.size())) / 2;
    assert((f.degree() - static_cast<int>(real_roots.size())) % 2 == 0);

    if (t > 0 && f.degree() == 2) {
        // complex pair of a quadratic: modulus^2 is the constant term
        EigenvalueClass cls;
        cls.is_real = false;
        cls.modulus_sq = RealAlgebraic(f.c[0]);
        Rat re = -f.c[1] / 2;
        cls.re = IntervalQ(re, re);
        auto [ilo, ihi] = sqrt_bounds(f.c[0] - re * re, 32);
        cls.im = IntervalQ(ilo, ihi);
        out.push_back(std::move(cls));
    } else if (t > 0) {
        auto [L1, L0] = quadratic_remainder(f);
        PolyQ D = sylvester_resultant(L1, L0, exact_div_poly);
        if (D.is_zero()) throw std::logic_error("vanishing pair resultant on squarefree input");
        PolyQ Dsq = squarefree_part(D);
        int found_pairs = 0;
        for (const auto& cand : isolate_real_roots(Dsq)) {
            if (sign_of(cand) <= 0) continue;  // modulus^2 is positive
            NumberField K(cand);
            auto specialize = [&](const BiPoly& B) {
                NFPoly g;
                for (const auto& coeff_in_m : B.c) g.c.push_back(K.reduce(coeff_in_m));
                g.normalize();
                return g;
            };
            NFPoly l1 = specialize(L1), l0 = specialize(L0);
            NFPoly G;
            if (l1.is_zero() && l0.is_zero())
                throw std::logic_error("remainder system vanished identically");
            else if (l1.is_zero())
                G = l0;
            else if (l0.is_zero())
                G = l1;
            else
                G = nf_gcd(K, l1, l0);
            if (G.degree() < 1) continue;  // spurious elimination root
            NFPoly Gs = G;
            {
                NFPoly d = nf_gcd(K, G, nf_derivative(G));
                if (d.degree() >= 1) {
                    NFPoly q;
                    nf_divmod(K, G, d, &q);
                    Gs = q;
                }
            }
            // real roots c of Gs with c^2 < 4 theta are the conjugate pairs
            for (auto iv : nf_isolate_roots(K, Gs)) {
                RealAlgebraic th = cand;
                bool accepted = false;
                while (true) {
                    IntervalQ c2 = iv * iv;
                    if (c2.hi < 4 * th.lo) {
                        accepted = true;
                        break;
                    }
                    if (c2.lo > 4 * th.hi) break;
                    nf_refine_root(K, Gs, iv);
                    refine_step(th);
                }
                if (!accepted) continue;
                ++found_pairs;
                EigenvalueClass cls;
                cls.is_real = false;
                cls.modulus_sq = cand;
                // pair = c/2 +- i sqrt(theta - c^2/4)
                while (iv.width() > Rat(1, 1 << 16)) nf_refine_root(K, Gs, iv);
                refine_below(th, Rat(1, 1 << 20));
                cls.re = IntervalQ(iv.lo / 2, iv.hi / 2);
                IntervalQ c2 = iv * iv;
                Rat lo_arg = th.lo - c2.hi / 4, hi_arg = th.hi - c2.lo / 4;
                if (lo_arg < 0) lo_arg = 0;
                cls.im = IntervalQ(sqrt_bounds(lo_arg, 24).first, sqrt_bounds(hi_arg, 24).second);
                out.push_back(std::move(cls));
            }
        }
        if (found_pairs != t)
            throw std::logic_error("pair accounting failed: expected " + std::to_string(t) +
                                   " conjugate pairs, found " + std::to_string(found_pairs));
    }

    std::sort(out.begin(), out.end(), [](const EigenvalueClass& x, const EigenvalueClass& y) {
        int c = compare(x.modulus_sq, y.modulus_sq);
        if (c != 0) return c < 0;
        if (x.is_real != y.is_real) return x.is_real;
        if (x.is_real && y.is_real) return compare(x.value, y.value) < 0;
        return x.re.lo < y.re.lo;
    });
    return out;
}

std::vector<ModulusClass> modulus_classes(const PolyQ& p) {
    std::vector<ModulusClass> out;
    for (const auto& cls : eigenvalue_classes(p)) {
        if (!out.empty() && compare(out.back().modulus_sq, cls.modulus_sq) == 0) {
            out.back().total_dim += cls.dim();
        } else {
            out.push_back({cls.modulus_sq, cls.dim()});
        }
    }
    return out;
}

}  // namespace gib
