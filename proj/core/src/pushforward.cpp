#include "chowbso/pushforward.hpp"

#include <stdexcept>

#include "chowbso/weyl_group.hpp"

namespace chowbso {

MultiPoly type_d_vandermonde(int n) {
    if (n < 2) throw std::invalid_argument("type_d_vandermonde: n must be >= 2");
    MultiPoly delta = MultiPoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            MultiPoly factor(n);
            factor.add_term(Monomial::variable(j, 2), 1);
            factor.add_term(Monomial::variable(i, 2), -1);
            delta *= factor;
        }
    return delta;
}

MultiPoly odd_staircase_monomial(int n) {
    if (n < 2) throw std::invalid_argument("odd_staircase_monomial: n must be >= 2");
    std::vector<Monomial::Entry> entries;
    entries.reserve(n);
    for (int j = 0; j < n; ++j) entries.emplace_back(j, 2 * j + 1);
    MultiPoly out(n);
    out.add_term(Monomial(std::move(entries)), 1);
    return out;
}

PushforwardResult pushforward_flag(const MultiPoly& f, int n) {
    if (n < 2) throw std::invalid_argument("pushforward_flag: n must be >= 2");
    if (f.nvars() != n)
        throw std::invalid_argument("pushforward_flag: variable count mismatch");

    MultiPoly numerator(n);
    for (const auto& w : enumerate_weyl_d(n)) {
        if (w.permutation_sign() > 0)
            numerator += act(w, f);
        else
            numerator -= act(w, f);
    }

    PushforwardResult result{exact_div(numerator, type_d_vandermonde(n)), n * n - n};
    if (!is_weyl_d_invariant(result.value, n))
        throw std::logic_error("pushforward_flag: result is not invariant (internal bug)");
    return result;
}

} // namespace chowbso
