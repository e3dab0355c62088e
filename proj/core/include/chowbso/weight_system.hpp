// Weight systems of SO(2n) representations on the diagonal maximal torus:
// each weight is an integer vector w with character w . z, and the total
// Chern class of the representation restricts to prod_w (1 + w . z).
#pragma once

#include <vector>

#include "chowbso/multipoly.hpp"

namespace chowbso {

enum class WeightLabel { standard, lambda, dplus_extreme, custom };

struct WeightSystem {
    int nvars = 0;
    WeightLabel label = WeightLabel::custom;
    int lambda_k = -1; // exterior power, for label == lambda
    // Multiset of weight vectors, each of length nvars, sorted for
    // deterministic products. Repeats are meaningful (weight multiplicity).
    std::vector<std::vector<int>> weights;

    std::size_t size() const { return weights.size(); }
};

// The 2n weights +-z_i of the standard representation; 1 <= n <= 16.
WeightSystem weights_standard(int n);

// All C(2n, k) k-element subset sums of the standard weights (the k-th
// exterior power); zero vectors and repeats are kept. 0 <= k <= 2n, and the
// ambient product bound 1 <= n <= 16 applies.
WeightSystem weights_lambda(int n, int k);

// The 2^{n-1} extreme weights of the self-dual forms: all vectors in
// {+1,-1}^n with an even number of +1 entries; 1 <= n <= 16.
WeightSystem weights_dplus_extreme(int n);

WeightSystem weights_custom(int n, std::vector<std::vector<int>> weights);

// prod over weights of (1 + w . z), exact full expansion. Factors whose
// weights come in +-w pairs are multiplied pairwise first (an associativity
// reshuffle only), which keeps intermediate results small.
MultiPoly total_chern(const WeightSystem& ws);

} // namespace chowbso
