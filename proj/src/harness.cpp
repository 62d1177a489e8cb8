#include "gib/harness.hpp"

#include <map>
#include <set>

#include "gib/blocks.hpp"

namespace gib {

bool lex_less(const MatZ& a, const MatZ& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
        }
    return false;
}

GroupSample word_closure(const std::vector<MatZ>& generators, int max_word_length) {
    if (generators.empty()) throw std::invalid_argument("empty generating set");
    size_t n = generators[0].rows();
    std::vector<MatZ> step;
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("generators must share one dimension");
        if (!is_glnz(g)) throw std::invalid_argument("generators must lie in GL(n, Z)");
        step.push_back(g);
        auto gi = inverse(to_mat_q(g));
        auto gz = to_mat_z(*gi);
        step.push_back(*gz);
    }
    auto cmp = [](const MatZ& a, const MatZ& b) { return lex_less(a, b); };
    std::set<MatZ, decltype(cmp)> seen(cmp);
    std::vector<MatZ> frontier{MatZ::identity(n)};
    seen.insert(frontier[0]);
    for (int len = 1; len <= max_word_length; ++len) {
        std::vector<MatZ> next;
        for (const auto& w : frontier)
            for (const auto& g : step) {
                MatZ prod = w * g;
                if (seen.insert(prod).second) next.push_back(prod);
            }
        frontier = std::move(next);
    }
    GroupSample out;
    out.generators = generators;
    out.max_word_length = max_word_length;
    out.elements.assign(seen.begin(), seen.end());
    return out;
}

CheckReport unipotent_check(const GroupSample& sample, const GibData& data) {
    CheckReport rep;
    rep.check = "unipotent";
    rep.passed = true;
    PolyQ target = PolyQ::constant(Rat(1));
    PolyQ lin{std::vector<Rat>{Rat(-1), Rat(1)}};
    for (size_t k = 0; k < data.n; ++k) target = target * lin;
    for (const auto& m : sample.elements) {
        ++rep.elements_checked;
        auto aut = check_automorphism(m, data);
        if (!aut.is_member) {
            rep.passed = false;
            ++rep.violations;
            if (!rep.counterexample) rep.counterexample = m;
            rep.detail = "sample contains a non-member; the check applies to members only";
            continue;
        }
        if (charpoly(m) == target && m != MatZ::identity(data.n)) {
            rep.passed = false;
            ++rep.violations;
            rep.counterexample = m;
            rep.detail = "nontrivial unipotent member";
        }
    }
    return rep;
}

CheckReport block_det_check(const GroupSample& sample) {
    CheckReport rep;
    rep.check = "block-determinant";
    rep.passed = true;
    size_t obstructed = 0;
    for (const auto& m : sample.elements) {
        ++rep.elements_checked;
        // factor-level claim: unit constant terms
        for (const auto& [f, mult] : factor_poly_q(charpoly(m))) {
            Rat c0 = f.c[0];
            if (!(c0 == 1 || c0 == -1)) {
                rep.passed = false;
                ++rep.violations;
                rep.counterexample = m;
                rep.detail = "factor with non-unit constant term: " + to_string(f);
            }
        }
        auto res = block_decompose(m);
        if (auto* dec = std::get_if<BlockDecomposition>(&res)) {
            for (const auto& b : dec->blocks) {
                Int d = det(b);
                if (!(d == 1 || d == -1)) {
                    rep.passed = false;
                    ++rep.violations;
                    rep.counterexample = m;
                    rep.detail = "block determinant " + d.get_str();
                }
            }
        } else {
            ++obstructed;
        }
    }
    if (obstructed > 0)
        rep.detail += (rep.detail.empty() ? "" : "; ") + std::to_string(obstructed) +
                      " element(s) decompose only at finite index; factor-level check applied";
    return rep;
}

CheckReport torus_part_check(const GroupSample& sample, const GibData& data) {
    CheckReport rep;
    rep.check = "torus-part";
    rep.passed = true;
    std::vector<QuadElem> ratios;
    for (const auto& m : sample.elements) {
        ++rep.elements_checked;
        auto aut = check_automorphism(m, data);
        if (!aut.is_member) {
            rep.passed = false;
            ++rep.violations;
            if (!rep.counterexample) rep.counterexample = m;
            rep.detail = "sample contains a non-member";
            continue;
        }
        ratios.push_back(*aut.ratio_sq);
    }
    if (!rep.passed) return rep;

    // multiplicativity on a deterministic pair sample
    size_t n_el = sample.elements.size();
    for (size_t k = 0; k < 50 && n_el > 0; ++k) {
        size_t i = (k * 7919) % n_el, j = (k * 104729 + 13) % n_el;
        MatZ prod = sample.elements[i] * sample.elements[j];
        QuadElem expect = ratios[i] * ratios[j];
        if (!(similarity_ratio_sq(prod, data) == expect)) {
            rep.passed = false;
            ++rep.violations;
            rep.counterexample = prod;
            rep.detail = "ratio map failed multiplicativity";
        }
    }

    // strict generators give pairwise distinct power ratios
    bool any_strict = false;
    for (const auto& g : sample.generators) {
        auto aut = check_automorphism(g, data);
        if (!aut.is_member || !aut.is_strict) continue;
        any_strict = true;
        std::vector<QuadElem> powers;
        for (int k = -sample.max_word_length; k <= sample.max_word_length; ++k)
            powers.push_back(pow(*aut.ratio_sq, k));
        for (size_t i = 0; i < powers.size(); ++i)
            for (size_t j = i + 1; j < powers.size(); ++j)
                if (powers[i] == powers[j]) {
                    rep.passed = false;
                    ++rep.violations;
                    rep.counterexample = g;
                    rep.detail = "strict ratio powers collide";
                }
    }
    if (!any_strict) rep.detail += (rep.detail.empty() ? "" : "; ") + std::string("no strict element");
    return rep;
}

}  // namespace gib
