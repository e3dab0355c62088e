// Structure of W(D_n)-invariant polynomials: every invariant f splits
// uniquely as f = A(p1..pn) + e * B(p1..pn), where p_j is the j-th elementary
// symmetric function of z1^2..zn^2 and e = z1*...*zn.
//
// The split works one term at a time: in an invariant polynomial every
// monomial has all exponents of equal parity (the even sign flips act on a
// monomial by a scalar), the all-even part is a symmetric function of the
// squares, and the all-odd part is e times one. Symmetric functions are
// rewritten in elementary symmetric functions by leading-term subtraction,
// which is exact over the integers.
#pragma once

#include "chowbso/multipoly.hpp"

namespace chowbso {

// e_j(z1^2, .., zn^2) as a polynomial in z1..zn; 1 <= j <= n.
MultiPoly elementary_symmetric_squares(int n, int j);

// z1 * z2 * ... * zn
MultiPoly euler_monomial(int n);

struct InvariantDecomposition {
    // Both polynomials live in p-space: variable j-1 stands for p_j.
    MultiPoly a;
    MultiPoly b;
};

// Requires f to be W(D_n)-invariant (checked; throws std::invalid_argument
// otherwise). The reconstruction A(p(z)) + e*B(p(z)) == f is re-verified
// before returning; a mismatch is an internal bug and throws std::logic_error.
InvariantDecomposition decompose_invariant(const MultiPoly& f, int n);

// Evaluates a p-space polynomial at p_j = e_j(z1^2..zn^2): the A-part bridge
// back to z-space (the B-part needs an extra factor of e).
MultiPoly evaluate_in_squares(const MultiPoly& p_poly, int n);

} // namespace chowbso
