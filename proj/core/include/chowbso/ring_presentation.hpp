// Presented rings for rank n:
//
//   Chow ring        Z[c2..c{2n}, y] / (2*c_odd, y*c_odd, y^2 - s*2^{2n-2}*c{2n})
//   cohomology ring  Z[c2..c{2n}, e] / (2*c_odd, e^2 - s*c{2n})
//
// with the sign s = (-1)^n under the default "consistent" convention (the one
// forced by the torus restriction c_{2j} -> (-1)^j e_j(z^2), e -> z1..zn) and
// s = +1 under the alternate "plus" convention. The two rewrites flip
// together so that the class map c_i -> c_i, y -> 2^{n-1} e stays a ring map
// under either convention.
//
// Elements are kept in normal form: y- resp. e-exponents at most 1, no y*c_odd
// monomials, and coefficients of monomials containing an odd c reduced mod 2
// into {0,1}. Normalization is confluent (randomized rewrite-order tests pin
// this down), so the normal form is a canonical representative.
#pragma once

#include <string>
#include <vector>

#include "chowbso/alphabet.hpp"
#include "chowbso/bigint.hpp"
#include "chowbso/multipoly.hpp"

namespace chowbso {

enum class E2Sign {
    consistent, // e^2 = (-1)^n c_{2n}, matching the torus model
    plus,       // e^2 = +c_{2n}
};

class ChowElement;
class CohElement;

// Shared layout for both presentations: generators c2..c{2n} at variable
// indices 0..2n-2, the rank-n generator (y or e) at index 2n-1.
class RingBasis {
public:
    RingBasis(int n, E2Sign sign);

    int rank() const { return n_; }
    E2Sign e2_sign() const { return sign_; }
    int nvars() const { return 2 * n_; }
    int top_index() const { return 2 * n_ - 1; } // y resp. e
    int c_index(int k) const;                    // generator c_k, 2 <= k <= 2n
    // Grading: c_k has degree k, the top generator degree n.
    int degree_of(const Monomial& m) const;
    bool has_odd_c(const Monomial& m) const;

    bool operator==(const RingBasis&) const = default;

private:
    int n_;
    E2Sign sign_;
};

class ChowRing {
public:
    explicit ChowRing(int n, E2Sign sign = E2Sign::consistent) : basis_(n, sign) {}

    const RingBasis& basis() const { return basis_; }
    int rank() const { return basis_.rank(); }
    VariableAlphabet alphabet() const { return VariableAlphabet::chow(basis_.rank()); }

    // Normal form of an arbitrary polynomial in the generators.
    ChowElement normalize(const MultiPoly& raw) const;
    ChowElement parse(std::string_view text) const;
    ChowElement zero() const;
    ChowElement one() const;

    // Canonical monomials of the given graded degree (y-exponent <= 1, no
    // y*c_odd); the normal forms are integer combinations of these, with
    // coefficients mod 2 on the c_odd-containing ones.
    std::vector<Monomial> basis_monomials(int degree) const;

    bool operator==(const ChowRing&) const = default;

private:
    RingBasis basis_;
};

class CohRing {
public:
    explicit CohRing(int n, E2Sign sign = E2Sign::consistent) : basis_(n, sign) {}

    const RingBasis& basis() const { return basis_; }
    int rank() const { return basis_.rank(); }
    VariableAlphabet alphabet() const { return VariableAlphabet::cohomology(basis_.rank()); }

    CohElement normalize(const MultiPoly& raw) const;
    CohElement parse(std::string_view text) const;
    CohElement zero() const;
    CohElement one() const;

    // Canonical monomials of the given graded degree (e-exponent <= 1; e*c_odd
    // is allowed here, unlike y*c_odd).
    std::vector<Monomial> basis_monomials(int degree) const;

    bool operator==(const CohRing&) const = default;

private:
    RingBasis basis_;
};

class ChowElement {
public:
    const ChowRing& ring() const { return ring_; }
    const MultiPoly& body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }
    // Maximal graded degree of a term, -1 for zero.
    int degree() const;
    ChowElement homogeneous_part(int degree) const;
    std::string to_string() const;

    friend ChowElement operator+(const ChowElement& a, const ChowElement& b);
    friend ChowElement operator-(const ChowElement& a, const ChowElement& b);
    friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
    friend ChowElement operator*(const Int& s, const ChowElement& a);
    bool operator==(const ChowElement&) const = default;

private:
    friend class ChowRing;
    ChowElement(ChowRing ring, MultiPoly body) : ring_(ring), body_(std::move(body)) {}
    ChowRing ring_;
    MultiPoly body_;
};

class CohElement {
public:
    const CohRing& ring() const { return ring_; }
    const MultiPoly& body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }
    int degree() const;
    CohElement homogeneous_part(int degree) const;
    std::string to_string() const;

    friend CohElement operator+(const CohElement& a, const CohElement& b);
    friend CohElement operator-(const CohElement& a, const CohElement& b);
    friend CohElement operator*(const CohElement& a, const CohElement& b);
    friend CohElement operator*(const Int& s, const CohElement& a);
    bool operator==(const CohElement&) const = default;

private:
    friend class CohRing;
    CohElement(CohRing ring, MultiPoly body) : ring_(ring), body_(std::move(body)) {}
    CohRing ring_;
    MultiPoly body_;
};

// The ring map c_i -> c_i, y -> 2^{n-1} e onto the same-rank cohomology ring
// with the same sign convention. Injective on normal forms.
CohElement class_map(const ChowElement& x);

// Restriction to the torus: c_{2j} -> (-1)^j e_j(z1^2..zn^2), c_odd -> 0,
// e -> z1*...*zn. A ring map under the consistent convention (it is what
// forces that convention); defined monomial-wise regardless.
MultiPoly torus_restriction(const CohElement& x);

// Writes a W(D_n)-invariant polynomial in the image generators:
// f = A(p) + e*B(p) with p_j -> (-1)^j c_{2j}. Inverse to torus_restriction
// on the consistent-convention c_even/e subring.
CohElement express_in_generators(const MultiPoly& f, int n);

struct SelfDualChernReport {
    Int d;        // coefficient of e in the degree-n part of the extreme-weight product
    CohElement p; // the complementary c-polynomial of degree n
};

// Degree-n part of total_chern(weights_dplus_extreme(n)) expressed in the
// generators: d*e + p with |d| = 2^{n-1}(n-1)!. Requires 2 <= n <= 5.
SelfDualChernReport self_dual_chern_report(int n);

} // namespace chowbso
