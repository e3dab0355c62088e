// The Weyl group W(D_n): signed permutations of z1..zn with an even number
// of sign changes, acting on polynomials by z_i -> sign[i] * z_{perm[i]}.
#pragma once

#include <cstdint>
#include <vector>

#include "chowbso/multipoly.hpp"

namespace chowbso {

struct SignedPermutation {
    // perm is a bijection on {0..n-1}; element i maps z_i to sign[i]*z_{perm[i]}
    std::vector<int> perm;
    std::vector<std::int8_t> sign; // entries +1 or -1

    int degree() const { return static_cast<int>(perm.size()); }
    static SignedPermutation identity(int n);
    bool is_valid() const;
    // Even number of -1 signs, i.e. membership in W(D_n) rather than W(B_n).
    bool in_weyl_d() const;
    // Sign of the underlying (unsigned) permutation.
    int permutation_sign() const;

    bool operator==(const SignedPermutation&) const = default;
};

// w1 after w2: act(w1, act(w2, f)) == act(compose(w1, w2), f).
SignedPermutation compose(const SignedPermutation& w1, const SignedPermutation& w2);

// All 2^{n-1} * n! elements of W(D_n), ordered lexicographically by
// permutation (identity first) and, within a permutation, by ascending sign
// bitmask where bit i set means sign[i] == -1. Bounds: 1 <= n <= 8.
std::vector<SignedPermutation> enumerate_weyl_d(int n);

// Substitution z_i -> sign[i] * z_{perm[i]}; requires f.nvars() == w.degree().
MultiPoly act(const SignedPermutation& w, const MultiPoly& f);

// Fixedness under the generating set (adjacent transpositions and the double
// sign flip on the last two coordinates), which is equivalent to fixedness
// under all of W(D_n) because the action is a group action.
bool is_weyl_d_invariant(const MultiPoly& f, int n);

} // namespace chowbso
