// Pushforward along the flag bundle of the rank-2n special orthogonal
// quotient, modeled at the maximal-torus level.
//
// Convention (load-bearing, used everywhere downstream): the torus line
// classes restrict to the coordinates z1..zn, and the top Chern class of the
// tautological isotropic flag restriction is the monomial z1*z2^3*...*z_n^{2n-1}.
// With those identifications the pushforward of f is
//
//   p_*(f) = [ sum over w in W(D_n) of sgn(perm part of w) * w(f) ] / Delta,
//   Delta  = prod_{i<j} (z_j^2 - z_i^2),
//
// and the division is exact whenever f came from an actual class; exactness
// is enforced, never rounded. The sign of Delta is pinned by the n=2 case:
// pushforward(z1*z2^3) == +2*z1*z2.
#pragma once

#include "chowbso/multipoly.hpp"

namespace chowbso {

struct PushforwardResult {
    MultiPoly value;
    // Degree drop of the operator, n^2 - n = deg Delta; for homogeneous
    // nonzero input, degree(value) == degree(input) - fiber_degree_drop.
    int fiber_degree_drop;
};

// prod_{1 <= i < j <= n} (z_j^2 - z_i^2); n! terms, degree n^2 - n.
MultiPoly type_d_vandermonde(int n);

// The distinguished input z1 * z2^3 * ... * z_n^{2n-1} whose pushforward is
// 2^{n-1} * z1*...*zn.
MultiPoly odd_staircase_monomial(int n);

// Requires 2 <= n (the alternating sum is identically zero only against a
// nontrivial symmetric group) and f.nvars() == n. The result is checked to be
// W(D_n)-invariant; non-exact division propagates as NonDivisibleError.
PushforwardResult pushforward_flag(const MultiPoly& f, int n);

} // namespace chowbso
