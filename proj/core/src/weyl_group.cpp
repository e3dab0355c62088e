#include "chowbso/weyl_group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace chowbso {

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation w;
    w.perm.resize(n);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.sign.assign(n, 1);
    return w;
}

bool SignedPermutation::is_valid() const {
    int n = degree();
    if (static_cast<int>(sign.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int image : perm) {
        if (image < 0 || image >= n || seen[image]) return false;
        seen[image] = true;
    }
    for (auto s : sign)
        if (s != 1 && s != -1) return false;
    return true;
}

bool SignedPermutation::in_weyl_d() const {
    int flips = 0;
    for (auto s : sign)
        if (s == -1) ++flips;
    return flips % 2 == 0;
}

int SignedPermutation::permutation_sign() const {
    // parity via cycle decomposition
    int n = degree();
    std::vector<bool> seen(n, false);
    int sgn = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

SignedPermutation compose(const SignedPermutation& w1, const SignedPermutation& w2) {
    if (w1.degree() != w2.degree())
        throw std::invalid_argument("signed permutation: degree mismatch");
    int n = w1.degree();
    SignedPermutation w;
    w.perm.resize(n);
    w.sign.resize(n);
    // Applying w2 then w1 sends z_i to sign2[i]*sign1[perm2[i]] * z_{perm1[perm2[i]]}.
    for (int i = 0; i < n; ++i) {
        w.perm[i] = w1.perm[w2.perm[i]];
        w.sign[i] = static_cast<std::int8_t>(w2.sign[i] * w1.sign[w2.perm[i]]);
    }
    return w;
}

std::vector<SignedPermutation> enumerate_weyl_d(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("enumerate_weyl_d: n out of range (1..8)");
    std::vector<SignedPermutation> out;
    Int order = pow2(static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n));
    out.reserve(static_cast<std::size_t>(order));

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) % 2 != 0) continue;
            SignedPermutation w;
            w.perm = perm;
            w.sign.resize(n);
            for (int i = 0; i < n; ++i)
                w.sign[i] = (mask >> i) & 1 ? -1 : 1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MultiPoly act(const SignedPermutation& w, const MultiPoly& f) {
    int n = w.degree();
    if (f.nvars() != n)
        throw std::invalid_argument("act: polynomial and group element disagree on variable count");
    MultiPoly out(n);
    std::vector<Monomial::Entry> entries;
    for (const auto& [m, c] : f.terms()) {
        entries.clear();
        int flip = 1;
        for (const auto& [idx, exp] : m.entries()) {
            entries.emplace_back(w.perm[idx], exp);
            if (w.sign[idx] == -1 && exp % 2 != 0) flip = -flip;
        }
        out.add_term(Monomial(entries), flip == 1 ? c : -c);
    }
    return out;
}

bool is_weyl_d_invariant(const MultiPoly& f, int n) {
    if (f.nvars() != n)
        throw std::invalid_argument("is_weyl_d_invariant: variable count mismatch");
    if (n <= 1) return true; // W(D_1) is trivial
    for (int i = 0; i + 1 < n; ++i) {
        SignedPermutation s = SignedPermutation::identity(n);
        std::swap(s.perm[i], s.perm[i + 1]);
        if (act(s, f) != f) return false;
    }
    SignedPermutation t = SignedPermutation::identity(n);
    t.sign[n - 2] = -1;
    t.sign[n - 1] = -1;
    return act(t, f) == f;
}

} // namespace chowbso
