// Deterministic random generators shared by the test suites. Every suite
// seeds its own std::mt19937_64 with a fixed constant so failures reproduce.
#pragma once

#include <random>
#include <vector>

#include "chowbso/multipoly.hpp"

namespace chowbso::testutil {

inline Monomial random_monomial(std::mt19937_64& rng, int nvars, int max_exp) {
    std::uniform_int_distribution<int> exp_dist(0, max_exp);
    std::vector<Monomial::Entry> entries;
    for (int i = 0; i < nvars; ++i) {
        int e = exp_dist(rng);
        if (e > 0) entries.emplace_back(i, e);
    }
    return Monomial(std::move(entries));
}

inline MultiPoly random_poly(std::mt19937_64& rng, int nvars, int terms, int max_exp,
                             int max_coeff) {
    MultiPoly p(nvars);
    std::uniform_int_distribution<int> coeff_dist(-max_coeff, max_coeff);
    for (int t = 0; t < terms; ++t)
        p.add_term(random_monomial(rng, nvars, max_exp), coeff_dist(rng));
    return p;
}

inline MultiPoly random_multilinear(std::mt19937_64& rng, int nvars, int terms, int max_coeff) {
    return random_poly(rng, nvars, terms, 1, max_coeff);
}

// Nonzero variant for divisor positions.
inline MultiPoly random_nonzero_poly(std::mt19937_64& rng, int nvars, int terms, int max_exp,
                                     int max_coeff) {
    for (;;) {
        MultiPoly p = random_poly(rng, nvars, terms, max_exp, max_coeff);
        if (!p.is_zero()) return p;
    }
}

} // namespace chowbso::testutil
