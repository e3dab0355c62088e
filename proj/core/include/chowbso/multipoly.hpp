// Sparse multivariate polynomials over arbitrary-precision integers.
//
// Terms live in a std::map keyed by graded-lex monomial order, so every
// polynomial has one canonical in-memory form: equality is map equality and
// printing is deterministic. All arithmetic is exact; there is no floating
// point anywhere.
#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowbso/bigint.hpp"
#include "chowbso/monomial.hpp"

namespace chowbso {

// Thrown by exact_div when the divisor does not divide the dividend. Carries
// the partial quotient and the nonzero remainder (a == quotient*b + remainder)
// as a witness. Callers that rely on exactness (the flag pushforward above
// all) must let this propagate: it signals a bug, not a recoverable state.
class NonDivisibleError;

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Int>;

    explicit MultiPoly(int nvars);
    static MultiPoly constant(int nvars, Int value);
    static MultiPoly variable(int nvars, int index);
    // Accumulates duplicate monomials and drops zero coefficients.
    static MultiPoly from_terms(int nvars, std::vector<std::pair<Monomial, Int>> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    // -1 for the zero polynomial
    int total_degree() const;
    Int coefficient(const Monomial& m) const;
    bool is_multilinear() const;
    bool is_homogeneous(int degree) const;
    MultiPoly homogeneous_part(int degree) const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    MultiPoly operator-() const;
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }
    MultiPoly& operator*=(const Int& scalar);
    friend MultiPoly operator*(MultiPoly lhs, const Int& scalar) { return lhs *= scalar; }
    friend MultiPoly operator*(const Int& scalar, MultiPoly rhs) { return rhs *= scalar; }

    bool operator==(const MultiPoly&) const = default;

    // Adds c * m in place (merging with an existing term if present).
    void add_term(const Monomial& m, Int c);

    // Leading term under graded lex; precondition: not zero.
    std::pair<Monomial, Int> leading_term() const;

private:
    void check_same_vars(const MultiPoly& rhs) const;
    void check_monomial(const Monomial& m) const;

    int nvars_;
    TermMap terms_;
};

class NonDivisibleError : public std::runtime_error {
public:
    NonDivisibleError(std::string message, MultiPoly quotient, MultiPoly remainder)
        : std::runtime_error(std::move(message)),
          quotient_(std::move(quotient)),
          remainder_(std::move(remainder)) {}
    const MultiPoly& partial_quotient() const { return quotient_; }
    const MultiPoly& remainder() const { return remainder_; }

private:
    MultiPoly quotient_;
    MultiPoly remainder_;
};

// Product of the two polynomials with every non-square-free monomial dropped
// from the result, i.e. exactly truncate(lhs * rhs) where truncate removes
// terms with any exponent >= 2. When both inputs are themselves square-free,
// folding a product through this preserves every square-free coefficient of
// the full product, which is how the big extreme-weight products stay small.
MultiPoly mul_multilinear_truncated(const MultiPoly& lhs, const MultiPoly& rhs);

// Drops every term with some exponent >= 2.
MultiPoly truncate_multilinear(const MultiPoly& p);

// Exact quotient a / b over the integers; throws NonDivisibleError (with the
// nonzero remainder as witness) when b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

Int coefficient_of(const MultiPoly& p, const Monomial& m);

// p with variable i replaced by images[i]; images must all share one variable
// count, which becomes the variable count of the result.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

MultiPoly poly_pow(const MultiPoly& base, unsigned exponent);

} // namespace chowbso
