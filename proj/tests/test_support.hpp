#pragma once
// Shared helpers for the test suites: tiny deterministic generators for
// random sparse polynomials and curve elements.

#include <random>

#include "equijac/curve.hpp"

namespace equijac::testing {

inline Poly random_poly(std::mt19937_64& rng, int max_terms = 4, int max_exp = 3,
                        bool allow_y = false) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> coefd(-6, 6);
    std::uniform_int_distribution<int> pick(0, kNumVars - 1);
    Poly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Mono m{};
        for (int tries = 0; tries < 3; ++tries) {
            int v = pick(rng);
            if (!allow_y && (v == 2 || v == 3)) continue;
            m[v] = static_cast<std::uint16_t>(expd(rng));
        }
        int c = coefd(rng);
        if (c == 0) c = 1;
        p.add_term(m, make_rat(c));
    }
    return p;
}

inline CurveElement random_element(std::mt19937_64& rng, int max_delta = 2) {
    std::uniform_int_distribution<int> kd(0, max_delta);
    return CurveElement(random_poly(rng), random_poly(rng), random_poly(rng), random_poly(rng),
                        kd(rng));
}

}  // namespace equijac::testing
