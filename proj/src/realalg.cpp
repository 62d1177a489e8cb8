#include "gib/realalg.hpp"

#include <algorithm>
#include <cassert>

namespace gib {

IntervalQ operator+(const IntervalQ& x, const IntervalQ& y) {
    return IntervalQ(x.lo + y.lo, x.hi + y.hi);
}

IntervalQ operator-(const IntervalQ& x, const IntervalQ& y) {
    return IntervalQ(x.lo - y.hi, x.hi - y.lo);
}

IntervalQ operator*(const IntervalQ& x, const IntervalQ& y) {
    Rat a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
    return IntervalQ(std::min(std::min(a, b), std::min(c, d)),
                     std::max(std::max(a, b), std::max(c, d)));
}

IntervalQ interval_eval(const PolyQ& p, const IntervalQ& x) {
    IntervalQ r(Rat(0), Rat(0));
    for (size_t i = p.c.size(); i-- > 0;) {
        r = r * x + IntervalQ(p.c[i], p.c[i]);
    }
    return r;
}

RealAlgebraic::RealAlgebraic(const Rat& r)
    : minpoly{std::vector<Rat>{-r, Rat(1)}}, lo(r - 1), hi(r + 1) {}

RealAlgebraic::RealAlgebraic(PolyQ f, Rat lo_, Rat hi_)
    : minpoly(std::move(f)), lo(std::move(lo_)), hi(std::move(hi_)) {
    if (minpoly.degree() < 1) throw std::invalid_argument("constant minimal polynomial");
    minpoly = minpoly.monic();
    if (!(lo < hi)) throw std::invalid_argument("empty isolating interval");
    if (minpoly(lo) == 0 || minpoly(hi) == 0)
        throw std::invalid_argument("isolating interval endpoint is a root");
    auto seq = sturm_sequence(minpoly);
    if (count_roots_in(seq, lo, hi) != 1)
        throw std::invalid_argument("interval does not isolate exactly one root");
}

Rat RealAlgebraic::rational_value() const {
    assert(is_rational());
    return -minpoly.c[0];
}

std::vector<PolyQ> sturm_sequence(const PolyQ& p) {
    std::vector<PolyQ> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    PolyQ d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        const PolyQ& a = seq[seq.size() - 2];
        const PolyQ& b = seq[seq.size() - 1];
        PolyQ r = divmod(a, b).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

int sign_variations_at(const std::vector<PolyQ>& seq, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& f : seq) {
        int s = sgn(f(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int count_roots_in(const std::vector<PolyQ>& seq, const Rat& a, const Rat& b) {
    assert(a <= b);
    return sign_variations_at(seq, a) - sign_variations_at(seq, b);
}

int count_real_roots(const PolyQ& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    PolyQ f = squarefree_part(p);
    if (f.degree() == 0) return 0;
    auto seq = sturm_sequence(f);
    Rat bound = 1;
    for (int i = 0; i < f.degree(); ++i) {
        Rat m = abs(f.c[i] / f.lead());
        if (m > bound - 1) bound = m + 1;
    }
    return count_roots_in(seq, -bound, bound);
}

namespace {

Rat cauchy_bound(const PolyQ& f) {
    Rat bound = 1;
    for (int i = 0; i < f.degree(); ++i) {
        Rat m = abs(f.c[i] / f.lead());
        if (m > bound - 1) bound = m + 1;
    }
    return bound;
}

// roots of one irreducible polynomial (no merging)
std::vector<RealAlgebraic> isolate_irreducible(const PolyQ& f) {
    std::vector<RealAlgebraic> out;
    if (f.degree() == 1) {
        Rat r = -f.c[0] / f.c[1];
        out.emplace_back(r);
        return out;
    }
    auto seq = sturm_sequence(f);
    Rat bound = cauchy_bound(f);
    // endpoints +-bound are not roots (strictly beyond the Cauchy bound once
    // widened); f irreducible of degree >= 2 has no rational roots at all
    struct Seg {
        Rat a, b;
        int n;
    };
    std::vector<Seg> work{{-bound - 1, bound + 1, 0}};
    work[0].n = count_roots_in(seq, work[0].a, work[0].b);
    std::vector<std::pair<Rat, Rat>> found;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            found.emplace_back(s.a, s.b);
            continue;
        }
        Rat mid = (s.a + s.b) / 2;
        int left = count_roots_in(seq, s.a, mid);
        work.push_back({s.a, mid, left});
        work.push_back({mid, s.b, s.n - left});
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [a, b] : found) out.emplace_back(f, a, b);
    return out;
}

}  // namespace

void refine_step(RealAlgebraic& x) {
    if (x.minpoly.degree() == 1) {
        Rat r = x.rational_value();
        Rat w = (x.hi - x.lo) / 4;
        x.lo = r - w;
        x.hi = r + w;
        return;
    }
    Rat mid = (x.lo + x.hi) / 2;
    int sm = sgn(x.minpoly(mid));
    assert(sm != 0);  // irreducible of degree >= 2 has no rational roots
    if (sm == sgn(x.minpoly(x.lo)))
        x.lo = mid;
    else
        x.hi = mid;
}

void refine_below(RealAlgebraic& x, const Rat& width) {
    while (x.hi - x.lo >= width) refine_step(x);
}

std::vector<RealAlgebraic> isolate_real_roots(const PolyQ& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of zero");
    if (!is_squarefree_poly(p))
        throw std::invalid_argument("isolate_real_roots requires squarefree input");
    std::vector<RealAlgebraic> all;
    for (const auto& [f, mult] : factor_poly_q(p)) {
        assert(mult == 1);
        for (auto& r : isolate_irreducible(f)) all.push_back(std::move(r));
    }
    std::sort(all.begin(), all.end(),
              [](const RealAlgebraic& x, const RealAlgebraic& y) { return compare(x, y) < 0; });
    for (auto& r : all) refine_below(r, Rat(1, 8));
    // make intervals pairwise disjoint so downstream code can order by eye
    for (size_t i = 0; i + 1 < all.size(); ++i) {
        while (!(all[i].hi <= all[i + 1].lo)) {
            refine_step(all[i]);
            refine_step(all[i + 1]);
        }
    }
    return all;
}

int compare(const RealAlgebraic& x, const RealAlgebraic& y) {
    if (x.minpoly == y.minpoly) {
        Rat lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
        if (lo < hi) {
            auto seq = sturm_sequence(x.minpoly);
            if (count_roots_in(seq, lo, hi) >= 1) return 0;  // shared root
        }
        // disjoint positions decide the order
        if (x.lo <= y.lo) return -1;
        return 1;
    }
    RealAlgebraic a = x, b = y;
    while (true) {
        if (a.hi <= b.lo) return -1;
        if (b.hi <= a.lo) return 1;
        refine_step(a);
        refine_step(b);
    }
}

int compare_rat(const RealAlgebraic& x, const Rat& r) {
    if (x.minpoly(r) == 0) {
        // only a degree-1 minimal polynomial can have a rational root
        return 0;
    }
    RealAlgebraic a = x;
    while (a.lo < r && r < a.hi) refine_step(a);
    if (a.hi <= r) return -1;
    if (r <= a.lo) return 1;
    return 0;
}

int sign_of(const RealAlgebraic& x) { return compare_rat(x, Rat(0)); }

int sign_at(const PolyQ& f, const RealAlgebraic& x) {
    if (f.is_zero()) return 0;
    PolyQ r = divmod(f, x.minpoly).second;
    if (r.is_zero()) return 0;
    RealAlgebraic a = x;
    while (true) {
        int s = interval_eval(r, a.interval()).sign();
        if (s != 0) return s;
        refine_step(a);
    }
}

RealAlgebraic square(const RealAlgebraic& x) {
    if (x.is_rational()) {
        Rat r = x.rational_value();
        return RealAlgebraic(r * r);
    }
    PolyQ resolvent = squares_resolvent(x.minpoly);
    auto factors = factor_poly_q(resolvent);
    RealAlgebraic a = x;
    // refine until the squared interval isolates one root of one factor
    while (true) {
        if (a.interval().sign() == 0) {
            refine_step(a);
            continue;
        }
        IntervalQ sq = a.interval() * a.interval();
        const PolyQ* unique_factor = nullptr;
        int total = 0;
        bool endpoint_hit = false;
        for (const auto& [f, mult] : factors) {
            if (f(sq.lo) == 0 || f(sq.hi) == 0) {
                endpoint_hit = true;
                break;
            }
            int k = count_roots_in(sturm_sequence(f), sq.lo, sq.hi);
            if (k > 0) {
                total += k;
                unique_factor = &f;
            }
        }
        if (!endpoint_hit && total == 1) return RealAlgebraic(*unique_factor, sq.lo, sq.hi);
        refine_step(a);
    }
}

RealAlgebraic to_real_algebraic(const QuadElem& x) {
    if (x.is_rational()) return RealAlgebraic(x.a);
    // root of (t - a)^2 - d b^2, i.e. t^2 - 2a t + (a^2 - d b^2)
    PolyQ f{std::vector<Rat>{x.a * x.a - Rat(x.d) * x.b * x.b, -2 * x.a, Rat(1)}};
    assert(is_irreducible(f));
    // the two conjugate roots straddle a; pick ours by the sign of b
    auto roots = isolate_irreducible(f);
    assert(roots.size() == 2);
    return sgn(x.b) > 0 ? roots[1] : roots[0];
}

int compare_moduli(const RealAlgebraic& x, const RealAlgebraic& y) {
    return compare(square(x), square(y));
}

double to_double(const RealAlgebraic& x) {
    RealAlgebraic a = x;
    refine_below(a, Rat(1, Int(1) << 60));
    return to_double((a.lo + a.hi) / 2);
}

std::string to_string(const RealAlgebraic& x) {
    return "root of " + to_string(x.minpoly) + " in (" + rat_string(x.lo) + ", " +
           rat_string(x.hi) + ")";
}

}  // namespace gib
