#include "gib/equations.hpp"

#include <cassert>

namespace gib {

namespace {

// scale to a primitive integer matrix with positive first nonzero entry;
// returns the factor s with input = s * output
std::pair<Rat, MatQ> primitive_form(const MatQ& m) {
    std::vector<Rat> flat;
    flat.reserve(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) flat.push_back(m(i, j));
    Int den = 1;
    for (const auto& x : flat) {
        Int q = x.get_den();
        den = den / gcd_int(den, q) * q;
    }
    Int content = 0;
    for (const auto& x : flat) content = gcd_int(content, x.get_num() * (den / x.get_den()));
    if (content == 0) return {Rat(1), m};
    int lead_sign = 0;
    for (const auto& x : flat)
        if (x != 0) {
            lead_sign = sgn(x);
            break;
        }
    Rat scale = make_rat(lead_sign < 0 ? -content : content, den);
    MatQ out = m.map([&](const Rat& x) { return Rat(x / scale); });
    return {scale, out};
}

// minimal rational basis of span{a0, a1} with coefficients keeping
// a0 + a1 sqrt(d) = sum coeff_i mat_i
void reduce_pair(const MatQ& a0, const MatQ& a1, long d, std::vector<MatQ>& mats,
                 std::vector<QuadElem>& coeffs) {
    bool z0 = a0.is_zero(), z1 = a1.is_zero();
    if (z0 && z1) throw std::invalid_argument("zero combination has no basis");
    if (z1) {
        auto [s, m] = primitive_form(a0);
        mats.push_back(m);
        coeffs.emplace_back(s);
        return;
    }
    if (z0) {
        auto [s, m] = primitive_form(a1);
        mats.push_back(m);
        coeffs.push_back(QuadElem(Rat(0), s, d));
        return;
    }
    // proportionality test: a1 = c a0
    std::optional<Rat> c;
    bool proportional = true;
    for (size_t i = 0; i < a0.rows() && proportional; ++i)
        for (size_t j = 0; j < a0.cols() && proportional; ++j) {
            const Rat &x = a0(i, j), &y = a1(i, j);
            if (x == 0) {
                if (y != 0) proportional = false;
            } else {
                Rat r = y / x;
                if (!c)
                    c = r;
                else if (*c != r)
                    proportional = false;
            }
        }
    if (proportional && c) {
        auto [s, m] = primitive_form(a0);
        mats.push_back(m);
        coeffs.push_back(QuadElem(s, *c * s, d));  // (1 + c sqrt d) * s
        return;
    }
    auto [s0, m0] = primitive_form(a0);
    auto [s1, m1] = primitive_form(a1);
    mats.push_back(m0);
    coeffs.emplace_back(s0);
    mats.push_back(m1);
    coeffs.push_back(QuadElem(Rat(0), s1, d));
}

MatK mat_k_from_components(const MatQ& a0, const MatQ& a1, long d) {
    MatK out(a0.rows(), a0.cols());
    for (size_t i = 0; i < a0.rows(); ++i)
        for (size_t j = 0; j < a0.cols(); ++j) out(i, j) = QuadElem(a0(i, j), a1(i, j), d);
    return out;
}

}  // namespace

EquationSet zariski_equations(const GibData& data) {
    size_t n = data.n, h = data.dim_h();
    MatK s(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < h; ++j) s(i, j) = data.h_basis(i, j);
        for (size_t j = 0; j < data.dim_v(); ++j) s(i, h + j) = data.v_basis(i, j);
    }
    auto sinv = inverse(s);
    if (!sinv) throw std::invalid_argument("H and V do not span R^n");

    // projector onto H along V: columns of H-basis times the top rows of s^-1
    MatK xi(h, n);  // H-coordinates of the projection
    for (size_t i = 0; i < h; ++i)
        for (size_t j = 0; j < n; ++j) xi(i, j) = (*sinv)(i, j);
    MatK proj = data.h_basis * xi;

    // b extended by zero on V, as a form on R^n
    MatK form = xi.transpose() * data.gram * xi;

    EquationSet eqs;
    eqs.n = n;
    eqs.d = data.d;
    eqs.dim_h = h;
    eqs.projector = proj;
    eqs.form = form;

    auto [p0, p1] = split_components(proj);
    reduce_pair(p0, p1, data.d, eqs.commute_mats, eqs.commute_coeffs);
    auto [q0, q1] = split_components(form);
    reduce_pair(q0, q1, data.d, eqs.form_mats, eqs.form_coeffs);

    // reconstruction sanity: p and q are recovered from the retained basis
    {
        MatQ z(n, n);
        MatK back = mat_k_from_components(z, z, data.d);
        for (size_t i = 0; i < eqs.commute_mats.size(); ++i)
            back = back + eqs.commute_coeffs[i] * lift_to_field(eqs.commute_mats[i]);
        assert(back == proj);
        back = mat_k_from_components(z, z, data.d);
        for (size_t i = 0; i < eqs.form_mats.size(); ++i)
            back = back + eqs.form_coeffs[i] * lift_to_field(eqs.form_mats[i]);
        assert(back == form);
    }
    return eqs;
}

bool equations_satisfied(const MatZ& m, const EquationSet& eqs, EqMode mode) {
    if (m.rows() != eqs.n || m.cols() != eqs.n)
        throw std::invalid_argument("matrix size does not match the equation system");
    MatQ mq = to_mat_q(m);
    for (const auto& a : eqs.commute_mats) {
        if (a * mq != mq * a) return false;
    }
    if (mode == EqMode::isometry) {
        for (const auto& q : eqs.form_mats) {
            if (mq.transpose() * q * mq != q) return false;
        }
        return true;
    }
    // det_twisted: M^T q M = rho q over K with rho^h = det(M|_H)^2
    MatK mk = lift_to_field(mq);
    MatK lhs = mk.transpose() * eqs.form * mk;
    std::optional<QuadElem> rho;
    for (size_t i = 0; i < eqs.n; ++i)
        for (size_t j = 0; j < eqs.n; ++j) {
            if (!(eqs.form(i, j) == QuadElem())) {
                QuadElem r = lhs(i, j) / eqs.form(i, j);
                if (!rho)
                    rho = r;
                else if (!(*rho == r))
                    return false;
            } else if (!(lhs(i, j) == QuadElem())) {
                return false;
            }
        }
    if (!rho || real_sign(*rho) <= 0) return false;

    // restriction of M to H = im(projector): pick independent projector columns
    MatK pcols = eqs.projector;
    MatK hbasis(eqs.n, eqs.dim_h);
    {
        MatK probe = pcols;
        auto pivots = rref(probe);
        if (pivots.size() != eqs.dim_h) throw std::logic_error("projector rank mismatch");
        for (size_t j = 0; j < pivots.size(); ++j)
            for (size_t i = 0; i < eqs.n; ++i) hbasis(i, j) = pcols(i, pivots[j]);
    }
    MatK r(eqs.dim_h, eqs.dim_h);
    for (size_t j = 0; j < eqs.dim_h; ++j) {
        auto coords = solve_in_span(hbasis, (mk * hbasis).col(j));
        if (!coords) return false;  // commutation should prevent this
        for (size_t i = 0; i < eqs.dim_h; ++i) r(i, j) = (*coords)[i];
    }
    QuadElem delta = det(r);
    return pow(*rho, static_cast<long>(eqs.dim_h)) == delta * delta;
}

}  // namespace gib
