#include "chowbso/invariant_decomposition.hpp"

#include <stdexcept>

#include "chowbso/weyl_group.hpp"

namespace chowbso {

MultiPoly elementary_symmetric_squares(int n, int j) {
    if (n < 1 || j < 1 || j > n)
        throw std::invalid_argument("elementary_symmetric_squares: need 1 <= j <= n");
    // Standard column recurrence: fold in one variable at a time, keeping
    // e_0..e_j of the squares seen so far.
    std::vector<MultiPoly> e(j + 1, MultiPoly(n));
    e[0] = MultiPoly::constant(n, 1);
    for (int v = 0; v < n; ++v) {
        MultiPoly sq(n);
        sq.add_term(Monomial::variable(v, 2), 1);
        for (int k = std::min(j, v + 1); k >= 1; --k)
            e[k] += e[k - 1] * sq;
    }
    return e[j];
}

MultiPoly euler_monomial(int n) {
    if (n < 1) throw std::invalid_argument("euler_monomial: n must be >= 1");
    std::vector<Monomial::Entry> entries;
    for (int i = 0; i < n; ++i) entries.emplace_back(i, 1);
    MultiPoly out(n);
    out.add_term(Monomial(std::move(entries)), 1);
    return out;
}

namespace {

// Rewrites a symmetric polynomial in u1..un as a polynomial in the elementary
// symmetric functions (returned in p-space, variable j-1 for e_j). Classical
// leading-term subtraction: the graded-lex leading exponent of a symmetric
// polynomial is weakly decreasing, the matching product of elementaries has
// that very leading term with coefficient 1, subtract and repeat.
MultiPoly symmetric_to_elementary(MultiPoly f, int n) {
    std::vector<MultiPoly> elem(n + 1, MultiPoly(n));
    for (int j = 1; j <= n; ++j) {
        MultiPoly ej(n);
        // e_j(u1..un): sum of square-free degree-j monomials
        std::vector<int> idx(j);
        for (int i = 0; i < j; ++i) idx[i] = i;
        for (;;) {
            std::vector<Monomial::Entry> entries;
            for (int i : idx) entries.emplace_back(i, 1);
            ej.add_term(Monomial(std::move(entries)), 1);
            int k = j - 1;
            while (k >= 0 && idx[k] == n - j + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int t = k + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
        }
        elem[j] = std::move(ej);
    }

    MultiPoly result(n);
    while (!f.is_zero()) {
        auto [m, c] = f.leading_term();
        std::vector<int> lambda(n + 1, 0);
        for (const auto& [idx, exp] : m.entries()) lambda[idx] = exp;
        for (int i = 0; i + 1 < n; ++i)
            if (lambda[i] < lambda[i + 1])
                throw std::invalid_argument(
                    "symmetric_to_elementary: input is not a symmetric polynomial");

        MultiPoly subtrahend = MultiPoly::constant(n, c);
        std::vector<Monomial::Entry> p_entries;
        for (int j = 1; j <= n; ++j) {
            int mult = lambda[j - 1] - lambda[j];
            if (mult == 0) continue;
            subtrahend *= poly_pow(elem[j], static_cast<unsigned>(mult));
            p_entries.emplace_back(j - 1, mult);
        }
        result.add_term(Monomial(std::move(p_entries)), c);
        f -= subtrahend;
    }
    return result;
}

// Halve every exponent; precondition: all exponents even.
MultiPoly halve_exponents(const MultiPoly& f) {
    MultiPoly out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [idx, exp] : m.entries()) entries.emplace_back(idx, exp / 2);
        out.add_term(Monomial(std::move(entries)), c);
    }
    return out;
}

} // namespace

InvariantDecomposition decompose_invariant(const MultiPoly& f, int n) {
    if (n < 1) throw std::invalid_argument("decompose_invariant: n must be >= 1");
    if (f.nvars() != n)
        throw std::invalid_argument("decompose_invariant: variable count mismatch");
    if (!is_weyl_d_invariant(f, n))
        throw std::invalid_argument("decompose_invariant: polynomial is not W(D_n)-invariant");

    // Invariance forces each monomial into one of two parity classes.
    MultiPoly all_even(n), all_odd(n);
    for (const auto& [m, c] : f.terms()) {
        int even_count = 0, odd_count = 0;
        for (int i = 0; i < n; ++i)
            (m.exponent(i) % 2 == 0 ? even_count : odd_count)++;
        if (odd_count == 0) all_even.add_term(m, c);
        else if (even_count == 0) all_odd.add_term(m, c);
        else
            throw std::logic_error(
                "decompose_invariant: mixed-parity monomial in an invariant polynomial");
    }

    MultiPoly a = symmetric_to_elementary(halve_exponents(all_even), n);
    // all_odd = e * (polynomial with all exponents even)
    MultiPoly odd_quotient = exact_div(all_odd, euler_monomial(n));
    MultiPoly b = symmetric_to_elementary(halve_exponents(odd_quotient), n);

    MultiPoly rebuilt =
        evaluate_in_squares(a, n) + euler_monomial(n) * evaluate_in_squares(b, n);
    if (rebuilt != f)
        throw std::logic_error("decompose_invariant: reconstruction mismatch (internal bug)");
    return {std::move(a), std::move(b)};
}

MultiPoly evaluate_in_squares(const MultiPoly& p_poly, int n) {
    if (p_poly.nvars() != n)
        throw std::invalid_argument("evaluate_in_squares: variable count mismatch");
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (int j = 1; j <= n; ++j) images.push_back(elementary_symmetric_squares(n, j));
    return substitute(p_poly, images);
}

} // namespace chowbso
