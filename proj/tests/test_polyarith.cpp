#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowbso/multipoly.hpp"
#include "chowbso/parse.hpp"
#include "test_util.hpp"

using namespace chowbso;

namespace {

const VariableAlphabet kZ2 = VariableAlphabet::z(2);
const VariableAlphabet kZ3 = VariableAlphabet::z(3);

MultiPoly P(const char* text, const VariableAlphabet& alphabet = kZ2) {
    return parse_poly(text, alphabet);
}

} // namespace

TEST_CASE("monomial graded-lex order") {
    Monomial one;
    Monomial z1 = Monomial::variable(0);
    Monomial z2 = Monomial::variable(1);
    Monomial z1z2({{0, 1}, {1, 1}});
    Monomial z1sq = Monomial::variable(0, 2);
    Monomial z2sq = Monomial::variable(1, 2);

    CHECK(one < z1);
    CHECK(z2 < z1);          // same degree, z1 heavier
    CHECK(z1 < z2sq);        // degree decides first
    CHECK(z2sq < z1z2);      // degree 2: z1^2 > z1z2 > z2^2
    CHECK(z1z2 < z1sq);
    CHECK(z1sq * z2sq == Monomial({{0, 2}, {1, 2}}));
    CHECK(z1.divides(z1z2));
    CHECK(!z1sq.divides(z1z2));
    CHECK(z1z2.divided_by(z2) == z1);
    CHECK(Monomial({{1, 0}, {0, 3}}) == Monomial::variable(0, 3)); // zero exponents dropped
}

TEST_CASE("monomial rejects negative input") {
    CHECK_THROWS_AS(Monomial({{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Monomial({{0, -2}}), std::invalid_argument);
}

TEST_CASE("product of the rank-2 extreme-weight factors") {
    // hand expansion: (1+z1+z2)(1-z1-z2) = 1 - z1^2 - 2 z1 z2 - z2^2
    MultiPoly product = P("(1+z1+z2)*(1-z1-z2)");
    CHECK(product == P("1 - z1^2 - 2*z1*z2 - z2^2"));
    CHECK(product.total_degree() == 2);
    CHECK(coefficient_of(product, Monomial({{0, 1}, {1, 1}})) == -2);
}

TEST_CASE("square-free truncation of the same product") {
    MultiPoly a = P("1+z1+z2");
    MultiPoly b = P("1-z1-z2");
    CHECK(mul_multilinear_truncated(a, b) == P("1 - 2*z1*z2"));
}

TEST_CASE("coefficient extraction from a three-factor product") {
    MultiPoly g = P("(1+z1+z2)*(1+z1-z2)*(1-z1+z2)");
    CHECK(coefficient_of(g, Monomial({{0, 1}, {1, 1}})) == 2);
    CHECK(coefficient_of(g, Monomial({{0, 7}})) == 0); // absent monomial
}

TEST_CASE("exact division recovers a known quotient") {
    MultiPoly numerator = P("2*z1*z2^3 - 2*z1^3*z2");
    MultiPoly delta = P("z2^2 - z1^2");
    CHECK(exact_div(numerator, delta) == P("2*z1*z2"));
    CHECK(exact_div(MultiPoly(2), delta).is_zero()); // 0 / delta == 0
}

TEST_CASE("non-exact division reports a usable witness") {
    MultiPoly a = P("z1^2 + z2");
    MultiPoly b = P("z1 + 1");
    try {
        exact_div(a, b);
        FAIL("expected NonDivisibleError");
    } catch (const NonDivisibleError& err) {
        CHECK(!err.remainder().is_zero());
        CHECK(err.partial_quotient() * b + err.remainder() == a);
    }
    CHECK_THROWS_AS(exact_div(a, MultiPoly(2)), std::invalid_argument); // divide by zero
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(0x9a7741c001ull);
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly a = testutil::random_poly(rng, 3, 6, 3, 9);
        MultiPoly b = testutil::random_poly(rng, 3, 6, 3, 9);
        MultiPoly c = testutil::random_poly(rng, 3, 6, 3, 9);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + (-a) == MultiPoly(3));
        CHECK(a * MultiPoly::constant(3, 1) == a);
        CHECK((a * MultiPoly(3)).is_zero());
    }
}

TEST_CASE("exact_div inverts multiplication") {
    std::mt19937_64 rng(0x9a7741c002ull);
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly a = testutil::random_poly(rng, 3, 5, 3, 7);
        MultiPoly b = testutil::random_nonzero_poly(rng, 3, 4, 2, 7);
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("truncated multiplication agrees with truncate-after-multiply") {
    std::mt19937_64 rng(0x9a7741c003ull);
    for (int trial = 0; trial < 150; ++trial) {
        // multilinear inputs hit the bitmask path
        MultiPoly a = testutil::random_multilinear(rng, 4, 6, 9);
        MultiPoly b = testutil::random_multilinear(rng, 4, 6, 9);
        CHECK(mul_multilinear_truncated(a, b) == truncate_multilinear(a * b));
        // general inputs hit the merge path
        MultiPoly c = testutil::random_poly(rng, 4, 6, 3, 9);
        MultiPoly d = testutil::random_poly(rng, 4, 6, 3, 9);
        CHECK(mul_multilinear_truncated(c, d) == truncate_multilinear(c * d));
    }
}

TEST_CASE("square-free folding preserves square-free coefficients of big products") {
    // oracle: full product, then truncate; 12 random +-1 factors in 4 variables
    std::mt19937_64 rng(0x9a7741c004ull);
    std::uniform_int_distribution<int> sign(0, 1);
    MultiPoly full = MultiPoly::constant(4, 1);
    MultiPoly folded = MultiPoly::constant(4, 1);
    for (int f = 0; f < 12; ++f) {
        MultiPoly factor = MultiPoly::constant(4, 1);
        for (int i = 0; i < 4; ++i)
            factor.add_term(Monomial::variable(i), sign(rng) ? 1 : -1);
        full *= factor;
        folded = mul_multilinear_truncated(folded, factor);
    }
    CHECK(folded == truncate_multilinear(full));
}

TEST_CASE("variable count mismatches are rejected") {
    MultiPoly a(2), b(3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(exact_div(a, b), std::invalid_argument);
    CHECK_THROWS_AS(mul_multilinear_truncated(a, b), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::variable(2, 5), std::invalid_argument);
}

TEST_CASE("parser handles precedence and unary minus") {
    CHECK(P("-(1+z1)^2") == P("-1 - 2*z1 - z1^2"));
    CHECK(P("-z1^2") == MultiPoly(2) - P("z1^2"));
    CHECK(P("2^3") == MultiPoly::constant(2, 8));
    CHECK(P("z1*z2^3 - 2") == P("z1*z2^3") - MultiPoly::constant(2, 2));
    CHECK(P("  1 +  z1 ") == P("1+z1"));
    CHECK(P("--z1") == P("z1"));
    CHECK(P("z1^0") == P("1"));
    CHECK(P("0") == MultiPoly(2));
    CHECK(P("12345678901234567890123456789") ==
          MultiPoly::constant(2, Int("12345678901234567890123456789")));
}

TEST_CASE("parser reports positions for malformed input") {
    auto position_of_failure = [](const char* text) -> std::size_t {
        try {
            P(text);
        } catch (const ParseError& err) {
            return err.position();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(position_of_failure("z1 +") == 4);       // unexpected end
    CHECK(position_of_failure("z3 + 1") == 0);     // unknown variable for n=2
    CHECK(position_of_failure("z1^70000") == 3);   // exponent >= 2^16
    CHECK(position_of_failure("(z1") == 3);        // missing ')'
    CHECK(position_of_failure("z1 z2") == 3);      // no implicit multiplication
    CHECK(position_of_failure("z1^^2") == 3);      // exponent must be digits
    CHECK(position_of_failure("z1^(2)") == 3);     // parenthesized exponent rejected
    CHECK(position_of_failure("#") == 0);
    CHECK_THROWS_AS(P("z1^2^2"), ParseError);      // no chained exponent
}

TEST_CASE("printing is canonical and parses back") {
    CHECK(format_poly(MultiPoly(2), kZ2) == "0");
    CHECK(format_poly(P("z2^2 - z1^2 - z2^2 + 1 - z1^2 + 2"), kZ2) == "3 - 2*z1^2");
    CHECK(format_poly(P("(1-z1^2)*(1-z2^2)"), kZ2) == "1 - z1^2 - z2^2 + z1^2*z2^2");
    CHECK(format_poly(P("2*z1*z2"), kZ2) == "2*z1*z2");
    CHECK(format_poly(P("-16*z1"), kZ2) == "-16*z1");
    CHECK(format_poly(P("z1 - z2"), kZ2) == "z1 - z2");
    CHECK(format_poly(P("-1"), kZ2) == "-1");

    std::mt19937_64 rng(0x9a7741c005ull);
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly p = testutil::random_poly(rng, 3, 8, 4, 50);
        CHECK(parse_poly(format_poly(p, kZ3), kZ3) == p);
    }
}

TEST_CASE("degree bookkeeping") {
    CHECK(MultiPoly(2).total_degree() == -1);
    CHECK(P("5").total_degree() == 0);
    CHECK(P("1 + z1*z2^3").total_degree() == 4);
    MultiPoly p = P("1 + z1 + z2 + z1*z2");
    CHECK(p.homogeneous_part(1) == P("z1 + z2"));
    CHECK(p.homogeneous_part(3).is_zero());
    CHECK(p.is_homogeneous(1) == false);
    CHECK(P("z1 + z2").is_homogeneous(1));
}

TEST_CASE("substitution composes polynomials") {
    // f(z1, z2) = z1^2 + z2 at z1 -> u1 + u2, z2 -> u1*u2 (3-variable target)
    MultiPoly f = P("z1^2 + z2");
    std::vector<MultiPoly> images = {P("z1 + z2", kZ3), P("z1*z2", kZ3)};
    CHECK(substitute(f, images) == P("z1^2 + 3*z1*z2 + z2^2", kZ3));
    CHECK_THROWS_AS(substitute(f, std::span<const MultiPoly>{}), std::invalid_argument);
}

TEST_CASE("poly_pow matches repeated multiplication") {
    MultiPoly base = P("1 + z1 - z2");
    MultiPoly by_hand = MultiPoly::constant(2, 1);
    for (int k = 0; k <= 6; ++k) {
        CHECK(poly_pow(base, k) == by_hand);
        by_hand *= base;
    }
}
