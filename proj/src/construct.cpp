#include "gib/construct.hpp"

#include <cassert>

namespace gib {

MatZ multiplication_matrix(const QuadElem& x, long d) {
    auto [u, v] = ring_coordinates(x, d);
    MatZ m(2, 2);
    if (d % 4 == 1) {
        // w^2 = (d-1)/4 + w
        m(0, 0) = u;
        m(1, 0) = v;
        m(0, 1) = v * ((d - 1) / 4);
        m(1, 1) = u + v;
    } else {
        // w^2 = d
        m(0, 0) = u;
        m(1, 0) = v;
        m(0, 1) = v * d;
        m(1, 1) = u;
    }
    return m;
}

MatZ delta_embed(const MatK& g, const DeltaEmbedding& emb) {
    if (g.rows() != emb.m || g.cols() != emb.m)
        throw std::invalid_argument("matrix rank does not match the embedding");
    MatZ out(2 * emb.m, 2 * emb.m);
    for (size_t i = 0; i < emb.m; ++i)
        for (size_t j = 0; j < emb.m; ++j) {
            const QuadElem& x = g(i, j);
            if (!is_integral(QuadElem(x.a, x.b, x.b == 0 ? emb.d : x.d)))
                throw std::invalid_argument("delta_embed requires integral entries");
            MatZ blk = multiplication_matrix(x, emb.d);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) out(2 * i + a, 2 * j + b) = blk(a, b);
        }
    return out;
}

GibData delta_gib_data(const MatK& form, const DeltaEmbedding& emb) {
    const long d = emb.d;
    const size_t m = emb.m;
    QuadElem w = ring_generator(d);
    QuadElem sw = conjugate(w);
    QuadElem spread = w - sw;  // sqrt(d) or 2 sqrt(d)
    QuadElem scale = spread * spread;  // rational

    GibData data;
    data.n = 2 * m;
    data.d = d;
    data.h_basis = MatK(2 * m, m);
    data.v_basis = MatK(2 * m, m);
    for (size_t i = 0; i < m; ++i) {
        data.h_basis(2 * i, i) = w;
        data.h_basis(2 * i + 1, i) = QuadElem(-1);
        data.v_basis(2 * i, i) = sw;
        data.v_basis(2 * i + 1, i) = QuadElem(-1);
    }
    data.gram = MatK(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) data.gram(i, j) = scale * conjugate(form(i, j));
    return data;
}

FundBundle build_fund_example() {
    DeltaEmbedding emb{5, 3};
    QuadElem sqrt5(Rat(0), Rat(1), 5);
    QuadElem w = ring_generator(5);

    FundBundle out;
    out.q_form = MatK(3, 3);
    out.q_form(0, 0) = QuadElem(1);
    out.q_form(1, 1) = QuadElem(1);
    out.q_form(2, 2) = -sqrt5;
    out.data = delta_gib_data(out.q_form, emb);
    out.lambda = QuadElem(Rat(-3, 2), Rat(1, 2), 5);

    // multiplication by lambda^-1 = conj(lambda) = -(1 + w) acts on H by lambda
    QuadElem mu = conjugate(out.lambda);
    assert(mu == -(QuadElem(1) + w));
    MatK scalar(3, 3);
    for (int i = 0; i < 3; ++i) scalar(i, i) = mu;
    out.a = delta_embed(scalar, emb);

    MatK g0(3, 3);
    g0(0, 1) = QuadElem(-1);
    g0(1, 0) = QuadElem(1);
    g0(2, 2) = QuadElem(1);

    // hyperbolic element mixing the first and last coordinates:
    // columns (w^2, 0, w) and (sqrt5 w, 0, w^2) preserve q exactly
    MatK hyp(3, 3);
    hyp(0, 0) = w * w;
    hyp(2, 0) = w;
    hyp(1, 1) = QuadElem(1);
    hyp(0, 2) = sqrt5 * w;
    hyp(2, 2) = w * w;

    out.group_elements = {{"rotation", g0}, {"hyperbolic", hyp}};
    out.witnesses = {{"rotation", delta_embed(g0, emb)}, {"hyperbolic", delta_embed(hyp, emb)}};
    return out;
}

// ---------------------------------------------------------------------------
// bounded search
// ---------------------------------------------------------------------------

namespace {

QuadElem hermitian_pair(const std::vector<QuadElem>& x, const MatK& form,
                        const std::vector<QuadElem>& y, bool conjugate_left) {
    QuadElem acc;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        QuadElem xi = conjugate_left ? conjugate(x[i]) : x[i];
        for (size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            acc += xi * form(i, j) * y[j];
        }
    }
    return acc;
}

}  // namespace

std::vector<MatK> search_form_group(const MatK& form, long d, FormVariant variant, long bound) {
    if (form.rows() != form.cols()) throw std::invalid_argument("form must be square");
    const size_t m = form.rows();
    if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
    const bool unitary = variant == FormVariant::unitary;

    // all integral elements with ring coordinates in the box
    std::vector<QuadElem> scalars;
    for (long u = -bound; u <= bound; ++u) {
        if (d == 0) {
            scalars.emplace_back(Rat(u));
            continue;
        }
        for (long v = -bound; v <= bound; ++v) scalars.push_back(from_ring_coordinates(u, v, d));
    }
    // column candidates in lexicographic coordinate order
    std::vector<std::vector<QuadElem>> columns;
    {
        std::vector<QuadElem> cur;
        std::function<void()> rec = [&]() {
            if (cur.size() == m) {
                columns.push_back(cur);
                return;
            }
            for (const auto& s : scalars) {
                cur.push_back(s);
                rec();
                cur.pop_back();
            }
        };
        rec();
    }
    // per-position candidates with the right form norm
    std::vector<std::vector<size_t>> fitting(m);
    for (size_t idx = 0; idx < columns.size(); ++idx)
        for (size_t j = 0; j < m; ++j)
            if (hermitian_pair(columns[idx], form, columns[idx], unitary) == form(j, j))
                fitting[j].push_back(idx);

    std::vector<MatK> out;
    std::vector<std::vector<QuadElem>> cols(m);
    std::function<void(size_t)> dfs = [&](size_t j) {
        if (j == m) {
            MatK g(m, m);
            for (size_t c = 0; c < m; ++c)
                for (size_t i = 0; i < m; ++i) g(i, c) = cols[c][i];
            if (det(g) == QuadElem(1)) out.push_back(std::move(g));
            return;
        }
        for (size_t idx : fitting[j]) {
            const auto& cand = columns[idx];
            bool ok = true;
            for (size_t i = 0; i < j && ok; ++i) {
                if (!(hermitian_pair(cols[i], form, cand, unitary) == form(i, j))) ok = false;
                if (ok && unitary &&
                    !(hermitian_pair(cand, form, cols[i], unitary) == form(j, i)))
                    ok = false;
            }
            if (!ok) continue;
            cols[j] = cand;
            dfs(j + 1);
        }
    };
    dfs(0);
    return out;
}

std::pair<MatK, MatK> phi_embed(const MatK& g) {
    auto inv = inverse(g.transpose());
    if (!inv) throw std::invalid_argument("phi_embed requires an invertible matrix");
    return {g, *inv};
}

namespace {
MatK conj_mat(const MatK& g) {
    return g.map([](const QuadElem& x) { return conjugate(x); });
}
bool integral_mat(const MatK& g, long d) {
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < g.cols(); ++j) {
            const QuadElem& x = g(i, j);
            if (!is_integral(QuadElem(x.a, x.b, x.b == 0 ? d : x.d))) return false;
        }
    return true;
}
}  // namespace

bool phi_lattice_stable(const MatK& g, const MatK& a, long d) {
    if (!integral_mat(g, d)) return false;
    auto ginv_t = inverse(g.transpose());
    if (!ginv_t) return false;
    return *ginv_t * a == a * conj_mat(g);
}

bool phi_lattice_stable_membership(const MatK& g, const MatK& a, long d) {
    const size_t m = g.rows();
    auto ginv_t = inverse(g.transpose());
    if (!ginv_t) return false;
    QuadElem w = ring_generator(d);
    auto apply = [&](const MatK& mat, const std::vector<QuadElem>& x) {
        std::vector<QuadElem> y(mat.rows());
        for (size_t r = 0; r < mat.rows(); ++r) {
            QuadElem acc;
            for (size_t c = 0; c < mat.cols(); ++c) acc += mat(r, c) * x[c];
            y[r] = acc;
        }
        return y;
    };
    auto conj_vec = [](std::vector<QuadElem> x) {
        for (auto& e : x) e = conjugate(e);
        return x;
    };
    // module generators s = e_i and w e_i span L = {(s, A tau(s))}; the image
    // phi(g)(s, A tau(s)) = (g s, (g^T)^-1 A tau(s)) lies in L iff g s is
    // integral and the second part equals A tau(g s)
    for (size_t i = 0; i < m; ++i) {
        for (const QuadElem& unit : {QuadElem(1), w}) {
            std::vector<QuadElem> s(m);
            s[i] = unit;
            auto gs = apply(g, s);
            for (const auto& e : gs)
                if (!is_integral(QuadElem(e.a, e.b, e.b == 0 ? d : e.d))) return false;
            auto got = apply(*ginv_t, apply(a, conj_vec(s)));
            auto want = apply(a, conj_vec(gs));
            if (!(got == want)) return false;
        }
    }
    return true;
}

bool su_member(const MatK& g, const MatK& a, long d) {
    if (!integral_mat(g, d)) return false;
    if (!(det(g) == QuadElem(1))) return false;
    return conj_mat(g).transpose() * a * g == a;
}

// ---------------------------------------------------------------------------
// scaling actions on the restriction lattice
// ---------------------------------------------------------------------------

MatK diagonal_action_in_lattice(const QuadElem& alpha, const QuadElem& beta, long d, size_t m) {
    QuadElem w = ring_generator(d);
    QuadElem sw = conjugate(w);
    QuadElem denom = w - sw;
    // image of Delta(s) is (alpha conj(s), beta s) = c1 Delta(1) + c2 Delta(w)
    auto coords = [&](const QuadElem& sigma_part, const QuadElem& id_part) {
        QuadElem c2 = (id_part - sigma_part) / denom;
        QuadElem c1 = id_part - c2 * w;
        return std::pair<QuadElem, QuadElem>{c1, c2};
    };
    auto [c1a, c2a] = coords(alpha, beta);            // image of Delta(1)
    auto [c1b, c2b] = coords(alpha * sw, beta * w);   // image of Delta(w)
    MatK blk(2, 2);
    blk(0, 0) = c1a;
    blk(1, 0) = c2a;
    blk(0, 1) = c1b;
    blk(1, 1) = c2b;
    MatK full(2 * m, 2 * m);
    for (size_t i = 0; i < m; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) full(2 * i + a, 2 * i + b) = blk(a, b);
    return full;
}

bool preserves_delta_lattice(const QuadElem& alpha, const QuadElem& beta, long d) {
    MatK blk = diagonal_action_in_lattice(alpha, beta, d, 1);
    // lattice preserved iff the matrix is a rational integer matrix of det +-1
    MatQ z(2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            const QuadElem& x = blk(i, j);
            if (!(x.b == 0) || !is_integer(x.a)) return false;
            z(i, j) = x.a;
        }
    Rat dt = det(z);
    return dt == 1 || dt == -1;
}

bool preserves_delta_lattice_membership(const QuadElem& alpha, const QuadElem& beta, long d) {
    QuadElem w = ring_generator(d);
    // forward and inverse images of the generators must lie in the lattice:
    // (alpha conj(s), beta s) is Delta(t) iff t = beta s is integral and
    // alpha conj(s) = conj(t)
    auto in_lattice = [&](const QuadElem& al, const QuadElem& be) {
        for (const QuadElem& s : {QuadElem(1), w}) {
            QuadElem t = be * s;
            if (!is_integral(QuadElem(t.a, t.b, t.b == 0 ? d : t.d))) return false;
            if (!(al * conjugate(s) == conjugate(t))) return false;
        }
        return true;
    };
    if (alpha.is_zero() || beta.is_zero()) return false;
    return in_lattice(alpha, beta) && in_lattice(inverse(alpha), inverse(beta));
}

ScalingVariant make_scaling_variant(const std::string& name, const QuadElem& multiplier,
                                    const QuadElem& alpha, const QuadElem& beta, long d,
                                    size_t m) {
    ScalingVariant v;
    v.name = name;
    v.multiplier = multiplier;
    v.alpha = alpha;
    v.beta = beta;
    v.lattice_matrix = diagonal_action_in_lattice(alpha, beta, d, m);
    v.preserves_lattice = preserves_delta_lattice(alpha, beta, d);
    v.membership_agrees =
        preserves_delta_lattice_membership(alpha, beta, d) == v.preserves_lattice;
    return v;
}

// ---------------------------------------------------------------------------
// SO(p+1, r+1)
// ---------------------------------------------------------------------------

MatK sopq_unipotent(long p, long r, const std::vector<QuadElem>& v) {
    if (static_cast<long>(v.size()) != p + r)
        throw std::invalid_argument("unipotent parameter needs p + r coordinates");
    size_t n = p + r + 2;
    MatK g = MatK(n, n);
    for (size_t i = 0; i < n; ++i) g(i, i) = QuadElem(1);
    QuadElem norm;
    for (long k = 0; k < p + r; ++k) {
        QuadElem sign = k < p ? QuadElem(1) : QuadElem(-1);
        g(0, 1 + k) = -(sign * v[k]);   // -(v^T eta) row
        g(1 + k, n - 1) = v[k];
        norm += sign * v[k] * v[k];
    }
    g(0, n - 1) = -(QuadElem(Rat(1, 2)) * norm);
    return g;
}

MatK sopq_dilation(long p, long r, const QuadElem& lambda) {
    size_t n = p + r + 2;
    MatK g(n, n);
    g(0, 0) = lambda;
    for (long k = 0; k < p + r; ++k) g(1 + k, 1 + k) = QuadElem(1);
    g(n - 1, n - 1) = inverse(lambda);
    return g;
}

MatK sopq_so_embed(long p, long r, const MatK& a) {
    if (a.rows() != static_cast<size_t>(p + r) || a.cols() != a.rows())
        throw std::invalid_argument("inner block must be (p+r) x (p+r)");
    size_t n = p + r + 2;
    MatK g(n, n);
    g(0, 0) = QuadElem(1);
    g(n - 1, n - 1) = QuadElem(1);
    for (long i = 0; i < p + r; ++i)
        for (long j = 0; j < p + r; ++j) g(1 + i, 1 + j) = a(i, j);
    return g;
}

SopqBundle build_sopq(long p, long r) {
    if (p < 0 || r < 0 || p + r < 1)
        throw std::invalid_argument("build_sopq needs p, r >= 0 with p + r >= 1");
    SopqBundle out;
    out.p = p;
    out.r = r;
    size_t n = p + r + 2;
    out.eta = MatZ(n, n);
    out.eta(0, n - 1) = 1;
    out.eta(n - 1, 0) = 1;
    for (long k = 0; k < p + r; ++k) out.eta(1 + k, 1 + k) = k < p ? 1 : -1;

    QuadElem sqrt2(Rat(0), Rat(1), 2);
    out.b_form = MatK(p + r, p + r);
    for (long k = 0; k < p + r; ++k)
        out.b_form(k, k) = k < p ? QuadElem(1) : -sqrt2;

    DeltaEmbedding emb{2, static_cast<size_t>(p + r)};
    out.gib = delta_gib_data(out.b_form, emb);

    QuadElem unit = fundamental_unit(2);  // 1 + sqrt 2
    MatK scalar(p + r, p + r);
    for (long i = 0; i < p + r; ++i) scalar(i, i) = unit;
    out.strict_witness = delta_embed(scalar, emb);

    out.lambda = QuadElem(Rat(1), Rat(1, 2), 2);  // (2 + sqrt 2)/2
    QuadElem lam_inv = inverse(out.lambda);
    size_t m = p + r;
    out.scaling_variants = {
        make_scaling_variant("literal", out.lambda, lam_inv, QuadElem(1), 2, m),
        make_scaling_variant("scaled", out.lambda, lam_inv, out.lambda, 2, m),
        make_scaling_variant("unit-literal", unit, inverse(unit), QuadElem(1), 2, m),
        make_scaling_variant("unit-scaled", unit, inverse(unit), unit, 2, m),
        make_scaling_variant("unit-delta", unit, conjugate(unit), unit, 2, m),
    };
    return out;
}

}  // namespace gib
