// Arbitrary-precision integer coefficients and a few small helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chowbso {

// et_off: arithmetic yields plain values, not expression templates, so Int
// composes cleanly with containers and type deduction.
using Int = boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

inline Int pow2(unsigned k) {
    return Int(1) << k;
}

inline Int factorial(unsigned k) {
    Int r = 1;
    for (unsigned i = 2; i <= k; ++i) r *= i;
    return r;
}

// mod 2 with representative in {0, 1}
inline Int mod2(const Int& c) {
    return (c % 2 == 0) ? Int(0) : Int(1);
}

} // namespace chowbso
