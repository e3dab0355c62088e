#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowbso/euler_coefficient.hpp"
#include "chowbso/parse.hpp"
#include "chowbso/weight_system.hpp"

using namespace chowbso;

namespace {

MultiPoly P(int n, const char* text) { return parse_poly(text, VariableAlphabet::z(n)); }

Int binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    Int r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

} // namespace

TEST_CASE("standard weights") {
    WeightSystem ws = weights_standard(2);
    CHECK(ws.label == WeightLabel::standard);
    CHECK(ws.nvars == 2);
    std::vector<std::vector<int>> expected = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
    CHECK(ws.weights == expected);
    for (int n = 1; n <= 16; ++n) CHECK(weights_standard(n).size() == std::size_t(2 * n));
    CHECK_THROWS_AS(weights_standard(0), std::invalid_argument);
    CHECK_THROWS_AS(weights_standard(17), std::invalid_argument);
}

TEST_CASE("exterior power weights are subset sums") {
    WeightSystem ws = weights_lambda(2, 2);
    CHECK(ws.lambda_k == 2);
    std::vector<std::vector<int>> expected = {
        {-1, -1}, {-1, 1}, {0, 0}, {0, 0}, {1, -1}, {1, 1}};
    CHECK(ws.weights == expected);
    for (int n : {1, 2, 3})
        for (int k = 0; k <= 2 * n; ++k)
            CHECK(Int(weights_lambda(n, k).size()) == binom(2 * n, k));
    CHECK_THROWS_AS(weights_lambda(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(weights_lambda(2, -1), std::invalid_argument);
}

TEST_CASE("extreme weights of the self-dual forms") {
    WeightSystem two = weights_dplus_extreme(2);
    std::vector<std::vector<int>> expected2 = {{-1, -1}, {1, 1}};
    CHECK(two.weights == expected2);
    WeightSystem three = weights_dplus_extreme(3);
    std::vector<std::vector<int>> expected3 = {
        {-1, -1, -1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
    CHECK(three.weights == expected3);
    for (int n = 1; n <= 12; ++n) {
        WeightSystem ws = weights_dplus_extreme(n);
        CHECK(Int(ws.size()) == pow2(n - 1));
        for (const auto& w : ws.weights) {
            int plus = 0;
            for (int entry : w) {
                CHECK((entry == 1 || entry == -1));
                plus += entry == 1;
            }
            CHECK(plus % 2 == 0);
        }
    }
}

TEST_CASE("custom weights are sorted and validated") {
    WeightSystem ws = weights_custom(2, {{1, 0}, {-1, 0}});
    CHECK(ws.weights.front() == std::vector<int>{-1, 0});
    CHECK(ws.label == WeightLabel::custom);
    CHECK_THROWS_AS(weights_custom(2, {{1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("total Chern class of the standard representation") {
    CHECK(total_chern(weights_standard(2)) == P(2, "1 - z1^2 - z2^2 + z1^2*z2^2"));
    CHECK(format_poly(total_chern(weights_standard(2)), VariableAlphabet::z(2)) ==
          "1 - z1^2 - z2^2 + z1^2*z2^2");
    // prod (1 - z_i^2) directly
    for (int n = 1; n <= 5; ++n) {
        MultiPoly direct = MultiPoly::constant(n, 1);
        for (int i = 0; i < n; ++i)
            direct *= MultiPoly::constant(n, 1) -
                      MultiPoly::from_terms(n, {{Monomial::variable(i, 2), 1}});
        CHECK(total_chern(weights_standard(n)) == direct);
    }
}

TEST_CASE("total Chern class of exterior powers") {
    CHECK(total_chern(weights_lambda(2, 0)) == P(2, "1"));
    CHECK(total_chern(weights_lambda(2, 1)) == total_chern(weights_standard(2)));
    CHECK(total_chern(weights_lambda(2, 2)) ==
          P(2, "1 - 2*z1^2 - 2*z2^2 + z1^4 - 2*z1^2*z2^2 + z2^4"));
}

TEST_CASE("total Chern class of the extreme self-dual weights") {
    CHECK(total_chern(weights_dplus_extreme(2)) == P(2, "1 - z1^2 - 2*z1*z2 - z2^2"));
    // no +-pairs at odd rank, so this exercises the unpaired path
    CHECK(total_chern(weights_dplus_extreme(3)) ==
          P(3, "(1 - z1 - z2 - z3)*(1 + z1 + z2 - z3)*(1 + z1 - z2 + z3)*(1 - z1 + z2 + z3)"));
    CHECK(total_chern(weights_custom(2, {{1, 1}, {1, 1}})) == P(2, "(1 + z1 + z2)^2"));
    CHECK(total_chern(weights_custom(2, {})) == P(2, "1"));
}

TEST_CASE("closed form of the Euler coefficient magnitude") {
    CHECK(euler_coefficient_closed(1) == 1);
    CHECK(euler_coefficient_closed(2) == 2);
    CHECK(euler_coefficient_closed(3) == 8);
    CHECK(euler_coefficient_closed(4) == 48);
    CHECK(euler_coefficient_closed(5) == 384);
    CHECK_THROWS_AS(euler_coefficient_closed(0), std::invalid_argument);
}

TEST_CASE("product route is negative of the closed form") {
    for (int n = 2; n <= 8; ++n)
        CHECK(euler_coefficient_product(n) == -euler_coefficient_closed(n));
    CHECK_THROWS_AS(euler_coefficient_product(1), std::invalid_argument);
    CHECK_THROWS_AS(euler_coefficient_product(17), std::invalid_argument);
}

TEST_CASE("pairing route agrees factor by factor") {
    CHECK(pairing_route_product(2) == parse_poly("1 + z1", VariableAlphabet::z(1)));
    CHECK(pairing_route_product(3) ==
          parse_poly("(1 + z1 + z2)*(1 + z1 - z2)*(1 - z1 + z2)", VariableAlphabet::z(2)));
    CHECK(Int(pairing_route_product(4).nvars()) == 3);
    for (int n = 2; n <= 8; ++n)
        CHECK(euler_coefficient_pairing(n) == euler_coefficient_product(n));
    // the pairing route cross-checks against the full product at small rank
    for (int n : {2, 3, 4}) {
        MultiPoly g = pairing_route_product(n);
        Monomial squarefree;
        for (int i = 0; i < n - 1; ++i)
            squarefree = squarefree * Monomial::variable(i, 1);
        CHECK(euler_coefficient_pairing(n) == -pow2(n - 1) * g.coefficient(squarefree));
    }
}

TEST_CASE("pairing audit counts the unpaired factors") {
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i <= n - 1; ++i)
            CHECK(pairing_audit(n, i) == i);
    CHECK_THROWS_AS(pairing_audit(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(pairing_audit(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(pairing_audit(1, 1), std::invalid_argument);
}
