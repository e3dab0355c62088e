#include "chowbso/euler_coefficient.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "chowbso/weight_system.hpp"

namespace chowbso {

namespace {

void check_product_range(int n, const char* who) {
    if (n < 2 || n > 16)
        throw std::invalid_argument(std::string(who) + ": n out of range (2..16)");
}

Monomial squarefree_all(int nvars) {
    std::vector<Monomial::Entry> entries;
    for (int i = 0; i < nvars; ++i) entries.emplace_back(i, 1);
    return Monomial(std::move(entries));
}

// Sign vectors on m variables except all-minus, as +-1 rows in ascending
// bitmask order (bit i set <=> +1 on variable i).
std::vector<std::vector<int>> g_sign_vectors(int m) {
    std::vector<std::vector<int>> out;
    out.reserve((1u << m) - 1);
    for (unsigned mask = 1; mask < (1u << m); ++mask) { // mask 0 is all-minus
        std::vector<int> e(m);
        for (int i = 0; i < m; ++i) e[i] = (mask >> i) & 1 ? 1 : -1;
        out.push_back(std::move(e));
    }
    return out;
}

MultiPoly sign_factor(int nvars, const std::vector<int>& e) {
    MultiPoly f = MultiPoly::constant(nvars, 1);
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
        f.add_term(Monomial::variable(i), e[i]);
    return f;
}

} // namespace

Int euler_coefficient_closed(int n) {
    if (n < 1) throw std::invalid_argument("euler_coefficient_closed: n must be >= 1");
    return pow2(static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(n - 1));
}

Int euler_coefficient_product(int n) {
    check_product_range(n, "euler_coefficient_product");
    MultiPoly acc = MultiPoly::constant(n, 1);
    for (const auto& w : weights_dplus_extreme(n).weights)
        acc = mul_multilinear_truncated(acc, sign_factor(n, w));
    return acc.coefficient(squarefree_all(n));
}

MultiPoly pairing_route_product(int n) {
    if (n < 2) throw std::invalid_argument("pairing_route_product: n must be >= 2");
    int m = n - 1;
    MultiPoly acc = MultiPoly::constant(m, 1);
    for (const auto& e : g_sign_vectors(m)) acc *= sign_factor(m, e);
    return acc;
}

Int euler_coefficient_pairing(int n) {
    check_product_range(n, "euler_coefficient_pairing");
    int m = n - 1;
    MultiPoly acc = MultiPoly::constant(m, 1);
    for (const auto& e : g_sign_vectors(m)) acc = mul_multilinear_truncated(acc, sign_factor(m, e));
    return -pow2(static_cast<unsigned>(n - 1)) * acc.coefficient(squarefree_all(m));
}

int pairing_audit(int n, int i) {
    check_product_range(n, "pairing_audit");
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("pairing_audit: stage out of range (1..n-1)");
    int m = n - 1;

    // Factors are their sign masks (bit set <=> +1); mask 0 (all-minus) was
    // never part of g. Stage j consumes the top factor +^j -^(m-j).
    auto chosen = [m](int j) {
        unsigned mask = 0;
        for (int t = 0; t < j; ++t) mask |= 1u << t;
        return mask;
    };
    std::vector<bool> alive(1u << m, true);
    alive[0] = false;
    for (int j = 1; j < i; ++j) alive[chosen(j)] = false;

    int unpaired = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (!alive[mask]) continue;
        unsigned partner = mask ^ (1u << (i - 1)); // flip the sign of z_i
        if (!alive[partner]) ++unpaired;
    }
    return unpaired;
}

} // namespace chowbso
