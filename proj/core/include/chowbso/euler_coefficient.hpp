// Three independent routes to the Euler-class coefficient d_n of the
// self-dual forms: the coefficient of z1*...*zn in the product of the
// 2^{n-1} extreme-weight factors.
//
//   product route: fold the factors through square-free truncation (only the
//     coefficient of a square-free monomial is wanted, and truncation after
//     every factor preserves exactly those).
//   closed form:   d_n = -2^{n-1} (n-1)!  (sign fixed by the n=2 expansion
//     (1+z1+z2)(1-z1-z2) = 1 - z1^2 - 2 z1 z2 - z2^2, so d_2 = -2).
//   pairing route: strip the variable zn. Each remaining factor is determined
//     by its sign pattern on z1..z_{n-1}; collecting them gives the product g
//     over all sign vectors on n-1 variables except all-minus, and
//     d_n = -2^{n-1} * [z1...z_{n-1}] g.
//
// The pairing audit makes the combinatorial heart of that last route
// checkable: walking variables in order and always consuming the
// lexicographically top factor, the factors still in play at stage i pair up
// by flipping the sign of z_i -- except for exactly i of them.
#pragma once

#include <vector>

#include "chowbso/bigint.hpp"
#include "chowbso/multipoly.hpp"

namespace chowbso {

// 2^{n-1} * (n-1)! for n >= 1 (the absolute value of d_n).
Int euler_coefficient_closed(int n);

// Coefficient of z1*...*zn in the extreme-weight product; 2 <= n <= 16.
Int euler_coefficient_product(int n);

// Full product of (1 + sum e_i z_i) over all sign vectors e in {+-1}^{n-1}
// except all-minus; n - 1 variables, 2^{n-1} - 1 factors. Beware: the full
// expansion grows fast, keep n small (the coefficient routes below do not go
// through this).
MultiPoly pairing_route_product(int n);

// -2^{n-1} times the coefficient of z1*...*z_{n-1} in pairing_route_product(n), evaluated
// by square-free folding over the same factor list; 2 <= n <= 16. Must agree
// with euler_coefficient_product.
Int euler_coefficient_pairing(int n);

// Number of factors without a surviving z_i sign-flip partner at stage i of
// the sequential argument (stages 1..i-1 each consumed the top factor);
// always equals i. Requires 2 <= n <= 16 and 1 <= i <= n-1.
int pairing_audit(int n, int i);

} // namespace chowbso
