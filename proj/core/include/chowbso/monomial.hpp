// Sparse monomials: sorted (variable index, exponent) pairs, exponents > 0.
//
// The total order is graded lexicographic: compare total degree first, then
// exponent vectors lexicographically with z1 most significant (a larger
// exponent on the earliest differing variable wins). This is a genuine
// monomial order (multiplicative, a well-order in each degree), which is what
// exact division and the symmetric-function algorithms rely on.
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace chowbso {

class Monomial {
public:
    // (variable index, exponent); exponent always > 0 in stored form
    using Entry = std::pair<int, int>;

    Monomial() = default; // the monomial 1

    // Normalizes: sorts by index, merges duplicates by adding exponents,
    // drops zero exponents. Negative indices or exponents are rejected.
    explicit Monomial(std::vector<Entry> entries);
    Monomial(std::initializer_list<Entry> entries)
        : Monomial(std::vector<Entry>(entries)) {}

    static Monomial variable(int index, int exponent = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_constant() const { return entries_.empty(); }
    int exponent(int index) const;
    int total_degree() const;
    // Largest variable index present, -1 for the constant monomial.
    int max_var_index() const;
    bool is_multilinear() const; // all exponents <= 1

    Monomial operator*(const Monomial& rhs) const;
    bool divides(const Monomial& other) const;
    // Quotient this / rhs; precondition: rhs.divides(*this).
    Monomial divided_by(const Monomial& rhs) const;

    bool operator==(const Monomial&) const = default;
    std::strong_ordering operator<=>(const Monomial& rhs) const;

private:
    std::vector<Entry> entries_;
};

} // namespace chowbso
