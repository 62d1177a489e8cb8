#pragma once

// Exhaustive search oracle for fundamental units: scans irrational
// coordinates upward; units > 1 have strictly increasing irrational parts,
// so the first solution encountered is the fundamental unit.

#include "gib/quad.hpp"

namespace oracle {

inline gib::QuadElem exhaustive_unit(long d, long bound) {
    using namespace gib;
    bool half = (d % 4 == 1);
    for (Int b = 1; b <= bound; ++b) {
        std::vector<QuadElem> hits;
        if (half) {
            for (int n : {4, -4}) {
                Int a2 = d * b * b + n;
                if (is_square(a2)) {
                    Int a = isqrt(a2);
                    if ((a - b) % 2 == 0) hits.emplace_back(make_rat(a, 2), make_rat(b, 2), d);
                }
            }
        }
        for (int n : {1, -1}) {
            Int a2 = d * b * b + n;
            if (is_square(a2)) hits.emplace_back(Rat(isqrt(a2)), Rat(b), d);
        }
        QuadElem best;
        for (const auto& u : hits)
            if (real_sign(u - QuadElem(1)) > 0 && (best.is_zero() || u < best)) best = u;
        if (!best.is_zero()) return best;
    }
    throw std::runtime_error("no unit found within bound");
}

}  // namespace oracle
