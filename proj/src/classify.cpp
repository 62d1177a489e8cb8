#include "gib/classify.hpp"

#include <cassert>

namespace gib {

namespace {

// writes q > 0 as s^2 * d0 with d0 squarefree (s rational, d0 integer >= 1)
std::pair<Rat, long> squarefree_split(const Rat& q) {
    assert(q > 0);
    Int num = q.get_num() * q.get_den();  // q = num / den^2 * ... : q = (a b)/b^2
    long d0 = 1;
    Int s2 = 1;
    Int n = num;
    for (Int p = 2; p * p <= n; ++p) {
        int count = 0;
        while (n % p == 0) {
            n /= p;
            ++count;
        }
        if (count / 2 > 0) s2 *= pow_int(p, count / 2);
        if (count % 2 == 1) d0 *= p.get_si();
    }
    if (n > 1) d0 *= n.get_si();
    return {make_rat(s2, q.get_den()), d0};
}

}  // namespace

RealAlgebraic algebraic_sqrt(const RealAlgebraic& x) {
    if (sign_of(x) < 0) throw std::invalid_argument("square root of a negative value");
    if (x.is_rational()) {
        Rat v = x.rational_value();
        if (v == 0) return RealAlgebraic(Rat(0));
        auto [s, d0] = squarefree_split(v);
        if (d0 == 1) return RealAlgebraic(s);
        // root of t^2 - v
        PolyQ f{std::vector<Rat>{-v, Rat(0), Rat(1)}};
        auto [lo, hi] = sqrt_bounds(v, 24);
        return RealAlgebraic(f, lo - Rat(1, 1 << 26), hi + Rat(1, 1 << 26));
    }
    PolyQ lifted = subst_x_squared(x.minpoly);
    auto factors = factor_poly_q(lifted);
    RealAlgebraic a = x;
    while (!(a.lo > 0)) refine_step(a);
    while (true) {
        auto [slo, shi] = sqrt_bounds(a.lo, 30);
        auto [tlo, thi] = sqrt_bounds(a.hi, 30);
        Rat lo = slo - Rat(1, Int(1) << 32), hi = thi + Rat(1, Int(1) << 32);
        const PolyQ* unique_factor = nullptr;
        int total = 0;
        bool endpoint_hit = false;
        for (const auto& [f, mult] : factors) {
            if (f(lo) == 0 || f(hi) == 0) {
                endpoint_hit = true;
                break;
            }
            int k = count_roots_in(sturm_sequence(f), lo, hi);
            if (k > 0) {
                total += k;
                unique_factor = &f;
            }
        }
        if (!endpoint_hit && total == 1) return RealAlgebraic(*unique_factor, lo, hi);
        refine_step(a);
    }
}

std::optional<QuadElem> as_quad_elem(const RealAlgebraic& x) {
    if (x.is_rational()) return QuadElem(x.rational_value());
    if (x.minpoly.degree() != 2) return std::nullopt;
    // roots of t^2 + p t + q: -p/2 +- sqrt(disc)/2
    Rat p = x.minpoly.c[1], q = x.minpoly.c[0];
    Rat disc = p * p - 4 * q;
    if (disc <= 0) return std::nullopt;
    auto [s, d0] = squarefree_split(disc);
    QuadElem plus(-p / 2, s / 2, d0);
    if (compare(to_real_algebraic(plus), x) == 0) return plus;
    QuadElem minus(-p / 2, -s / 2, d0);
    assert(compare(to_real_algebraic(minus), x) == 0);
    return minus;
}

namespace {

// complex interval arithmetic for eigenvector enclosures
struct CInterval {
    IntervalQ re, im;
};

CInterval cmul(const CInterval& x, const CInterval& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
CInterval cadd(const CInterval& x, const CInterval& y) {
    return {x.re + y.re, x.im + y.im};
}

CInterval ceval(const PolyQ& p, const CInterval& z) {
    CInterval r{IntervalQ(Rat(0), Rat(0)), IntervalQ(Rat(0), Rat(0))};
    for (size_t i = p.c.size(); i-- > 0;)
        r = cadd(cmul(r, z), CInterval{IntervalQ(p.c[i], p.c[i]), IntervalQ(Rat(0), Rat(0))});
    return r;
}

// adjugate of (x I - B) as polynomial entries
Mat<PolyQ> char_adjugate(const MatZ& b) {
    size_t d = b.rows();
    Mat<PolyQ> xi(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            PolyQ e = PolyQ::constant(Rat(-b(i, j)));
            if (i == j) e = e + PolyQ::x();
            xi(i, j) = e;
        }
    Mat<PolyQ> adj(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            // cofactor C_ji for the adjugate
            std::vector<std::vector<PolyQ>> minor;
            for (size_t r = 0; r < d; ++r) {
                if (r == j) continue;
                std::vector<PolyQ> row;
                for (size_t c = 0; c < d; ++c) {
                    if (c == i) continue;
                    row.push_back(xi(r, c));
                }
                minor.push_back(std::move(row));
            }
            PolyQ det_minor =
                minor.empty() ? PolyQ::constant(Rat(1)) : bareiss_det(minor, exact_div_poly);
            adj(i, j) = ((i + j) % 2 == 0) ? det_minor : -det_minor;
        }
    return adj;
}

// eigenvector of a 2x2 block over the quadratic field
std::vector<QuadElem> quad_eigenvector(const MatZ& b, const QuadElem& mu) {
    QuadElem b00(Rat(b(0, 0))), b01(Rat(b(0, 1))), b10(Rat(b(1, 0))), b11(Rat(b(1, 1)));
    if (!(b01 == QuadElem())) return {b01, mu - b00};
    assert(!(b10 == QuadElem()));
    return {mu - b11, b10};
}

}  // namespace

ClassificationReport classify_similarity(const MatZ& a) {
    ClassificationReport rep;
    auto res = block_decompose(a);
    if (auto* obs = std::get_if<BlockObstruction>(&res)) {
        rep.obstruction = *obs;
        rep.refusal = "adapted basis exists only at finite index " + obs->index.get_str();
        return rep;
    }
    rep.decomposition = std::get<BlockDecomposition>(std::move(res));
    const BlockDecomposition& dec = *rep.decomposition;
    size_t n = a.rows();

    rep.group_classes.resize(dec.groups.size());
    for (size_t g = 0; g < dec.groups.size(); ++g)
        rep.group_classes[g] = eigenvalue_classes(dec.charpolys[dec.groups[g][0]]);

    // moduli shared by every group, excluding 1
    std::vector<RealAlgebraic> shared;
    for (const auto& cls : rep.group_classes[0]) {
        bool in_all = true;
        for (size_t g = 1; g < rep.group_classes.size() && in_all; ++g) {
            bool found = false;
            for (const auto& other : rep.group_classes[g])
                if (compare(other.modulus_sq, cls.modulus_sq) == 0) {
                    found = true;
                    break;
                }
            in_all = found;
        }
        if (!in_all) continue;
        if (compare_rat(cls.modulus_sq, Rat(1)) == 0) continue;
        bool dup = false;
        for (const auto& s : shared)
            if (compare(s, cls.modulus_sq) == 0) dup = true;
        if (!dup) shared.push_back(cls.modulus_sq);
    }
    std::sort(shared.begin(), shared.end(),
              [](const RealAlgebraic& x, const RealAlgebraic& y) { return compare(x, y) < 0; });
    if (shared.empty()) {
        rep.refusal = "no shared modulus != 1";
        return rep;
    }

    // block -> column offset of its basis inside u
    std::vector<size_t> offsets(dec.blocks.size(), 0);
    {
        size_t off = 0;
        for (size_t b = 0; b < dec.blocks.size(); ++b) {
            offsets[b] = off;
            off += dec.blocks[b].rows();
        }
    }

    for (const auto& msq : shared) {
        ClassificationCandidate cand;
        cand.modulus_sq = msq;
        cand.modulus = algebraic_sqrt(msq);
        cand.modulus_exact = as_quad_elem(cand.modulus);

        // Lambda per group, and whether the exact route applies
        bool exact_route = true;
        long common_d = 0;
        for (size_t g = 0; g < rep.group_classes.size(); ++g) {
            for (size_t k = 0; k < rep.group_classes[g].size(); ++k) {
                const auto& cls = rep.group_classes[g][k];
                if (compare(cls.modulus_sq, msq) != 0) continue;
                cand.lambda_classes.push_back({g, k});
                cand.dim_h += cls.dim() * dec.groups[g].size();
                if (!cls.is_real || cls.value.minpoly.degree() > 2) {
                    exact_route = false;
                    continue;
                }
                auto mu = as_quad_elem(cls.value);
                if (!mu) {
                    exact_route = false;
                    continue;
                }
                if (mu->d != 0) {
                    if (common_d != 0 && common_d != mu->d)
                        exact_route = false;
                    else
                        common_d = mu->d;
                }
            }
        }

        if (exact_route && common_d != 0) {
            GibData gib;
            gib.n = n;
            gib.d = common_d;
            std::vector<std::vector<QuadElem>> h_cols, v_cols;
            MatK uk = to_mat_q(dec.u).map([](const Rat& x) { return QuadElem(x); });
            for (size_t g = 0; g < dec.groups.size(); ++g) {
                for (size_t b_idx : dec.groups[g]) {
                    const MatZ& blk = dec.blocks[b_idx];
                    size_t d_blk = blk.rows();
                    for (const auto& cls : rep.group_classes[g]) {
                        bool in_lambda = compare(cls.modulus_sq, msq) == 0;
                        assert(cls.is_real && d_blk == 2);
                        auto mu = as_quad_elem(cls.value);
                        assert(mu);
                        auto vec = quad_eigenvector(blk, *mu);
                        std::vector<QuadElem> lifted(n, QuadElem());
                        for (size_t i = 0; i < n; ++i)
                            for (size_t k = 0; k < d_blk; ++k)
                                lifted[i] += uk(i, offsets[b_idx] + k) * vec[k];
                        (in_lambda ? h_cols : v_cols).push_back(std::move(lifted));
                    }
                }
            }
            gib.h_basis = MatK(n, h_cols.size());
            gib.v_basis = MatK(n, v_cols.size());
            for (size_t j = 0; j < h_cols.size(); ++j) gib.h_basis.set_col(j, h_cols[j]);
            for (size_t j = 0; j < v_cols.size(); ++j) gib.v_basis.set_col(j, v_cols[j]);
            gib.gram = MatK(h_cols.size(), h_cols.size());
            for (size_t i = 0; i < h_cols.size(); ++i) gib.gram(i, i) = QuadElem(1);
            cand.gib = std::move(gib);
            cand.witness = check_automorphism(a, *cand.gib);
            cand.note =
                "F_a = full multiplicity factor (maximal admissible choice); any family "
                "with a dense sum is admissible; eigenbasis declared orthonormal";
        } else {
            // certified interval enclosures of an H-basis, one adjugate
            // column per class and block
            for (const auto& ref : cand.lambda_classes) {
                const auto& cls = rep.group_classes[ref.group][ref.class_index];
                for (size_t b_idx : dec.groups[ref.group]) {
                    const MatZ& blk = dec.blocks[b_idx];
                    size_t d_blk = blk.rows();
                    Mat<PolyQ> adj = char_adjugate(blk);
                    // pick a nonzero adjugate column
                    size_t col = 0;
                    bool found = false;
                    for (size_t j = 0; j < d_blk && !found; ++j)
                        for (size_t i = 0; i < d_blk && !found; ++i)
                            if (!adj(i, j).is_zero()) {
                                col = j;
                                found = true;
                            }
                    if (cls.is_real) {
                        RealAlgebraic mu = cls.value;
                        refine_below(mu, Rat(1, 1 << 20));
                        std::vector<IntervalQ> vec(n, IntervalQ(Rat(0), Rat(0)));
                        for (size_t i = 0; i < n; ++i) {
                            IntervalQ acc(Rat(0), Rat(0));
                            for (size_t k = 0; k < d_blk; ++k) {
                                IntervalQ entry = interval_eval(adj(k, col), mu.interval());
                                Rat uik = Rat(dec.u(i, offsets[b_idx] + k));
                                acc = acc + IntervalQ(uik, uik) * entry;
                            }
                            vec[i] = acc;
                        }
                        cand.h_enclosures.push_back(std::move(vec));
                    } else {
                        CInterval z{cls.re, cls.im};
                        std::vector<IntervalQ> re_vec(n), im_vec(n);
                        for (size_t i = 0; i < n; ++i) {
                            CInterval acc{IntervalQ(Rat(0), Rat(0)), IntervalQ(Rat(0), Rat(0))};
                            for (size_t k = 0; k < d_blk; ++k) {
                                CInterval entry = ceval(adj(k, col), z);
                                Rat uik = Rat(dec.u(i, offsets[b_idx] + k));
                                CInterval scaled{IntervalQ(uik, uik) * entry.re,
                                                 IntervalQ(uik, uik) * entry.im};
                                acc = cadd(acc, scaled);
                            }
                            re_vec[i] = acc.re;
                            im_vec[i] = acc.im;
                        }
                        cand.h_enclosures.push_back(std::move(re_vec));
                        cand.h_enclosures.push_back(std::move(im_vec));
                    }
                }
            }
            cand.note =
                "H carries eigenvalues outside a single real quadratic field: basis given "
                "as certified enclosures; use the equation route for membership checks";
        }
        rep.candidates.push_back(std::move(cand));
    }
    return rep;
}

}  // namespace gib
