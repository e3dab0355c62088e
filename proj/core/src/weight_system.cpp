#include "chowbso/weight_system.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace chowbso {

namespace {

void check_rank(int n, const char* who) {
    if (n < 1 || n > 16)
        throw std::invalid_argument(std::string(who) + ": n out of range (1..16)");
}

} // namespace

WeightSystem weights_standard(int n) {
    check_rank(n, "weights_standard");
    WeightSystem ws{n, WeightLabel::standard, -1, {}};
    for (int i = 0; i < n; ++i) {
        std::vector<int> plus(n, 0), minus(n, 0);
        plus[i] = 1;
        minus[i] = -1;
        ws.weights.push_back(std::move(plus));
        ws.weights.push_back(std::move(minus));
    }
    std::sort(ws.weights.begin(), ws.weights.end());
    return ws;
}

WeightSystem weights_lambda(int n, int k) {
    check_rank(n, "weights_lambda");
    if (k < 0 || k > 2 * n)
        throw std::invalid_argument("weights_lambda: k out of range (0..2n)");
    WeightSystem standard = weights_standard(n);
    WeightSystem ws{n, WeightLabel::lambda, k, {}};

    // subset-sum over all k-element subsets of the 2n standard weights
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    int total = 2 * n;
    for (;;) {
        std::vector<int> sum(n, 0);
        for (int i : idx)
            for (int v = 0; v < n; ++v) sum[v] += standard.weights[i][v];
        ws.weights.push_back(std::move(sum));
        if (k == 0) break;
        int t = k - 1;
        while (t >= 0 && idx[t] == total - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
    std::sort(ws.weights.begin(), ws.weights.end());
    return ws;
}

WeightSystem weights_dplus_extreme(int n) {
    check_rank(n, "weights_dplus_extreme");
    WeightSystem ws{n, WeightLabel::dplus_extreme, -1, {}};
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) % 2 != 0) continue; // even number of +1 entries
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = (mask >> i) & 1 ? 1 : -1;
        ws.weights.push_back(std::move(w));
    }
    std::sort(ws.weights.begin(), ws.weights.end());
    return ws;
}

WeightSystem weights_custom(int n, std::vector<std::vector<int>> weights) {
    if (n < 1) throw std::invalid_argument("weights_custom: n must be >= 1");
    for (const auto& w : weights)
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("weights_custom: weight length mismatch");
    std::sort(weights.begin(), weights.end());
    return WeightSystem{n, WeightLabel::custom, -1, std::move(weights)};
}

namespace {

MultiPoly linear_factor(int n, const std::vector<int>& w) {
    MultiPoly f = MultiPoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        if (w[i] != 0) f.add_term(Monomial::variable(i), w[i]);
    return f;
}

} // namespace

MultiPoly total_chern(const WeightSystem& ws) {
    int n = ws.nvars;
    // Pair up w with -w where possible: (1 + w.z)(1 - w.z) = 1 - (w.z)^2 has
    // only even-degree terms, which roughly halves intermediate blowup.
    std::map<std::vector<int>, int> remaining;
    for (const auto& w : ws.weights) remaining[w]++;

    std::vector<MultiPoly> factors;
    for (auto& [w, count] : remaining) {
        std::vector<int> neg(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
        auto neg_it = remaining.find(neg);
        if (neg < w && neg_it != remaining.end()) continue; // handled at neg's visit
        if (neg == w) {
            // the zero weight: factor is the constant 1
            for (int t = 0; t < count; ++t) factors.push_back(linear_factor(n, w));
            continue;
        }
        int neg_count = neg_it != remaining.end() ? neg_it->second : 0;
        int pairs = std::min(count, neg_count);
        MultiPoly lin = linear_factor(n, w);
        MultiPoly neg_lin = linear_factor(n, neg);
        MultiPoly paired = lin * neg_lin;
        for (int t = 0; t < pairs; ++t) factors.push_back(paired);
        for (int t = pairs; t < count; ++t) factors.push_back(lin);
        for (int t = pairs; t < neg_count; ++t) factors.push_back(neg_lin);
    }

    MultiPoly out = MultiPoly::constant(n, 1);
    for (const auto& f : factors) out *= f;
    return out;
}

} // namespace chowbso
