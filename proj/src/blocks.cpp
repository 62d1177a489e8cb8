#include "gib/blocks.hpp"

#include <cassert>

namespace gib {

MatZ restriction_matrix(const MatZ& a, const MatZ& c) {
    MatQ cq = to_mat_q(c);
    MatZ r(c.cols(), c.cols());
    MatQ ac = to_mat_q(a) * cq;
    for (size_t j = 0; j < c.cols(); ++j) {
        auto x = solve_in_span(cq, ac.col(j));
        if (!x) throw std::invalid_argument("column span is not invariant");
        for (size_t i = 0; i < c.cols(); ++i) {
            if (!is_integer((*x)[i]))
                throw std::invalid_argument("restriction is not integral over the given basis");
            r(i, j) = (*x)[i].get_num();
        }
    }
    return r;
}

namespace {

// saturation of the cyclic lattice generated by v under r (degree d)
MatZ cyclic_sublattice(const MatZ& r, const std::vector<Int>& v, int d) {
    size_t n = r.rows();
    MatZ gens(n, d);
    std::vector<Int> cur = v;
    for (int k = 0; k < d; ++k) {
        for (size_t i = 0; i < n; ++i) gens(i, k) = cur[i];
        if (k + 1 < d) {
            std::vector<Int> next(n, Int(0));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) next[i] += r(i, j) * cur[j];
            cur = std::move(next);
        }
    }
    return hnf_saturate_cols(gens);
}

// Search for mult cyclic sublattices of rank d that sum to Z^(d*mult) with
// index 1. Depth-first over a small candidate pool; returns the best basis
// found and its index (1 on full success).
struct SplitResult {
    MatZ basis;  // (d*mult) x (d*mult)
    Int index;
};

SplitResult split_multiplicity(const MatZ& r, int d, int mult) {
    size_t n = r.rows();
    assert(n == static_cast<size_t>(d * mult));

    std::vector<std::vector<Int>> pool;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        pool.push_back(std::move(e));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (int s : {1, -1}) {
                std::vector<Int> e(n, Int(0));
                e[i] = 1;
                e[j] = s;
                pool.push_back(std::move(e));
            }

    std::vector<MatZ> candidates;
    candidates.reserve(pool.size());
    for (const auto& v : pool) {
        MatZ c = cyclic_sublattice(r, v, d);
        if (c.cols() == static_cast<size_t>(d)) candidates.push_back(std::move(c));
    }

    SplitResult best;
    best.index = 0;  // unset
    long nodes = 0;
    const long node_cap = 20000;

    std::vector<size_t> chosen;
    std::function<bool(size_t)> dfs = [&](size_t start) -> bool {
        if (static_cast<int>(chosen.size()) == mult) {
            MatZ basis(n, n);
            for (size_t t = 0; t < chosen.size(); ++t)
                for (int j = 0; j < d; ++j)
                    for (size_t i = 0; i < n; ++i)
                        basis(i, t * d + j) = candidates[chosen[t]](i, j);
            Int dt = det(basis);
            if (dt == 0) return false;
            Int idx = abs_int(dt);
            if (best.index == 0 || idx < best.index) {
                best.basis = basis;
                best.index = idx;
            }
            return idx == 1;
        }
        for (size_t c = start; c < candidates.size(); ++c) {
            if (++nodes > node_cap) return false;
            // quick rank pruning: candidate must be independent of the chosen span
            MatQ acc(n, (chosen.size() + 1) * d);
            size_t col = 0;
            for (size_t t : chosen)
                for (int j = 0; j < d; ++j, ++col)
                    for (size_t i = 0; i < n; ++i) acc(i, col) = Rat(candidates[t](i, j));
            for (int j = 0; j < d; ++j, ++col)
                for (size_t i = 0; i < n; ++i) acc(i, col) = Rat(candidates[c](i, j));
            if (rank(acc) != acc.cols()) continue;
            chosen.push_back(c);
            if (dfs(c + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    dfs(0);
    if (best.index == 0)
        throw std::domain_error("cyclic splitting found no full-rank candidate family");
    return best;
}

}  // namespace

BlockResult block_decompose(const MatZ& a) {
    if (!a.square()) throw std::invalid_argument("block_decompose expects a square matrix");
    if (!is_glnz(a)) throw std::invalid_argument("block_decompose expects a GL(n, Z) matrix");
    size_t n = a.rows();

    PolyQ cp = charpoly(a);
    auto factors = factor_poly_q(cp);

    struct FactorData {
        PolyQ f;
        int mult;
        MatZ lattice;   // saturated kernel lattice of f(A), n x (deg f * mult)
        MatZ restrict_; // action on that lattice
    };
    std::vector<FactorData> fd;
    for (const auto& [f, mult] : factors) {
        MatQ fa = poly_at_matrix(f, to_mat_q(a));
        auto ker = kernel(fa);
        if (static_cast<int>(ker.size()) != f.degree() * mult)
            throw std::domain_error(
                "matrix is not semisimple on the factor " + to_string(f) +
                ": no block-diagonal form with irreducible blocks exists at any index");
        MatZ gens(n, ker.size());
        for (size_t j = 0; j < ker.size(); ++j) {
            auto v = primitive_integer_vector(ker[j]);
            for (size_t i = 0; i < n; ++i) gens(i, j) = v[i];
        }
        MatZ lattice = hnf_saturate_cols(gens);
        MatZ restrict_ = restriction_matrix(a, lattice);
        fd.push_back({f, mult, std::move(lattice), std::move(restrict_)});
    }

    // split each factor lattice into cyclic blocks, then assemble
    MatZ u(n, n);
    size_t col = 0;
    std::vector<MatZ> block_bases;
    std::vector<PolyQ> charpolys;
    for (auto& fdata : fd) {
        int d = fdata.f.degree();
        MatZ inner;  // (d*mult) x (d*mult) in lattice coordinates
        if (fdata.mult == 1) {
            inner = MatZ::identity(d);
        } else {
            SplitResult sr = split_multiplicity(fdata.restrict_, d, fdata.mult);
            inner = sr.basis;
        }
        MatZ cols_in_zn(n, inner.cols());
        {
            MatQ prod = to_mat_q(fdata.lattice) * to_mat_q(inner);
            auto z = to_mat_z(prod);
            assert(z);
            cols_in_zn = *z;
        }
        for (size_t j = 0; j < cols_in_zn.cols(); ++j, ++col)
            for (size_t i = 0; i < n; ++i) u(i, col) = cols_in_zn(i, j);
        for (int b = 0; b < fdata.mult; ++b) {
            MatZ bb(n, d);
            for (int j = 0; j < d; ++j)
                for (size_t i = 0; i < n; ++i) bb(i, j) = cols_in_zn(i, b * d + j);
            block_bases.push_back(std::move(bb));
            charpolys.push_back(fdata.f);
        }
    }
    assert(col == n);

    Int du = det(u);
    if (!(du == 1 || du == -1)) {
        return BlockObstruction{
            abs_int(du), u,
            "invariant sublattices sum to a sublattice of index " + abs_int(du).get_str()};
    }

    BlockDecomposition out;
    out.u = u;
    for (size_t b = 0; b < block_bases.size(); ++b) {
        MatZ bm = restriction_matrix(a, block_bases[b]);
        assert(charpoly(bm) == charpolys[b]);
        out.blocks.push_back(std::move(bm));
    }
    out.charpolys = std::move(charpolys);
    // verify u^-1 a u is exactly block diagonal with the stated blocks
    {
        auto uinv = inverse(to_mat_q(u));
        assert(uinv);
        MatQ conj = *uinv * to_mat_q(a) * to_mat_q(u);
        size_t off = 0;
        for (const auto& b : out.blocks) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < b.cols(); ++j) {
                    Rat expect = (i >= off && i < off + b.rows()) ? Rat(b(i - off, j)) : Rat(0);
                    if (conj(i, off + j) != expect)
                        throw std::logic_error("adapted basis verification failed");
                }
            off += b.cols();
        }
    }
    // group by equal characteristic polynomial
    for (size_t b = 0; b < out.blocks.size(); ++b) {
        bool placed = false;
        for (auto& g : out.groups) {
            if (out.charpolys[g[0]] == out.charpolys[b]) {
                g.push_back(b);
                placed = true;
                break;
            }
        }
        if (!placed) out.groups.push_back({b});
    }
    return out;
}

}  // namespace gib
