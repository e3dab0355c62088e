#include "verify_suite.hpp"

#include <random>

#include "chowbso/chowbso.hpp"

namespace chowbso::verify {
namespace {

// Small deterministic polynomial fuzzers (fixed seeds come from the callers).
MultiPoly random_poly(std::mt19937_64& rng, int nvars, int terms, int max_exp, int max_coeff) {
    std::uniform_int_distribution<int> var(0, nvars - 1);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> factors(0, 3);
    MultiPoly f(nvars);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int k = factors(rng);
        for (int i = 0; i < k; ++i) {
            int e = exp(rng);
            if (e > 0) m = m * Monomial::variable(var(rng), e);
        }
        f += MultiPoly::from_terms(nvars, {{m, coeff(rng)}});
    }
    return f;
}

// Random W(D_n)-invariant, assembled as A(p) + e * B(p).
MultiPoly random_invariant(std::mt19937_64& rng, int n, int max_degree) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    MultiPoly f = MultiPoly::constant(n, coeff(rng));
    for (int j = 1; j <= n && 2 * j <= max_degree; ++j) {
        MultiPoly pj = elementary_symmetric_squares(n, j);
        f += MultiPoly::constant(n, coeff(rng)) * pj;
        if (4 * j <= max_degree) f += MultiPoly::constant(n, coeff(rng)) * pj * pj;
    }
    if (n <= max_degree) {
        MultiPoly b = MultiPoly::constant(n, coeff(rng));
        if (n + 2 <= max_degree)
            b += MultiPoly::constant(n, coeff(rng)) * elementary_symmetric_squares(n, 1);
        f += euler_monomial(n) * b;
    }
    return f;
}

CheckResult check_weyl_enumeration_order(int n) {
    CheckResult r{"weyl-enumeration-order", false, ""};
    auto group = enumerate_weyl_d(n);
    Int expected = pow2(n - 1) * factorial(n);
    bool all_valid = true;
    for (const auto& w : group) all_valid = all_valid && w.is_valid() && w.in_weyl_d();
    r.pass = Int(group.size()) == expected &&
             group.front() == SignedPermutation::identity(n) && all_valid;
    r.witness = "group order 2^(n-1)*n! = " + expected.str() +
                (r.pass ? ", identity enumerated first" : " MISMATCH");
    return r;
}

CheckResult check_group_action_composition(int n) {
    CheckResult r{"group-action-composition", false, ""};
    std::mt19937_64 rng(0xabba0000ull + static_cast<unsigned>(n));
    auto group = enumerate_weyl_d(n);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    int trials = 8;
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
        const auto& w1 = group[pick(rng)];
        const auto& w2 = group[pick(rng)];
        MultiPoly f = random_poly(rng, n, 4, 3, 7);
        ok = ok && act(w1, act(w2, f)) == act(compose(w1, w2), f);
    }
    r.pass = ok;
    r.witness = "8 random triples satisfy w1.(w2.f) == (w1*w2).f";
    if (!ok) r.witness += " FAILED";
    return r;
}

CheckResult check_d_coefficient_agreement(int n) {
    CheckResult r{"d-coefficient-agreement", false, ""};
    Int dp = euler_coefficient_product(n);
    Int dk = euler_coefficient_pairing(n);
    Int dc = euler_coefficient_closed(n);
    r.pass = dp == dk && dp == -dc;
    r.witness = "product " + dp.str() + ", pairing " + dk.str() + ", -closed " + (-dc).str();
    return r;
}

CheckResult check_staircase_pushforward(int n) {
    CheckResult r{"staircase-pushforward", false, ""};
    PushforwardResult pf = pushforward_flag(odd_staircase_monomial(n), n);
    r.pass = pf.value == pow2(n - 1) * euler_monomial(n) &&
             pf.fiber_degree_drop == n * n - n;
    r.witness = "p_*(z1*z2^3*...*zn^(2n-1)) == 2^(n-1)*z1*...*zn, degree drop n^2-n";
    if (!r.pass) r.witness += " FAILED";
    return r;
}

CheckResult check_projection_formula(int n) {
    CheckResult r{"projection-formula", false, ""};
    std::mt19937_64 rng(0xf00d0000ull + static_cast<unsigned>(n));
    MultiPoly s = MultiPoly::constant(n, 1);
    for (int j = 2; j <= n; ++j)
        s *= MultiPoly::from_terms(n, {{Monomial::variable(j - 1, 2 * j - 2), 1}});
    bool ok = true;
    for (int t = 0; t < 3; ++t) {
        MultiPoly g = random_invariant(rng, n, 6);
        ok = ok && pushforward_flag(s * g, n).value == pow2(n - 1) * g;
    }
    r.pass = ok;
    r.witness = "3 random invariants g: p_*(s*g) == 2^(n-1)*g";
    if (!ok) r.witness += " FAILED";
    return r;
}

CheckResult check_relation_images_vanish(int n) {
    CheckResult r{"relation-images-vanish", false, ""};
    bool ok = true;
    for (E2Sign sign : {E2Sign::consistent, E2Sign::plus}) {
        ChowRing chow(n, sign);
        CohRing coh(n, sign);
        Int s = sign == E2Sign::plus ? 1 : (n % 2 == 0 ? 1 : -1);
        std::string top = "c" + std::to_string(2 * n);
        for (int k = 3; k <= 2 * n - 1; k += 2) {
            std::string ck = "c" + std::to_string(k);
            ok = ok && chow.parse("2*" + ck).is_zero() && chow.parse("y*" + ck).is_zero();
            ok = ok && coh.parse("2*" + ck).is_zero();
        }
        ok = ok && chow.parse("y^2 - (" + s.str() + ")*" + pow2(2 * n - 2).str() + "*" + top)
                       .is_zero();
        ok = ok && coh.parse("e^2 - (" + s.str() + ")*" + top).is_zero();
    }
    // torus side, consistent convention only (that is what forces it)
    CohRing coh(n);
    Int s = n % 2 == 0 ? 1 : -1;
    MultiPoly img_e = torus_restriction(coh.parse("e"));
    MultiPoly img_top = torus_restriction(coh.parse("c" + std::to_string(2 * n)));
    ok = ok && img_e * img_e == s * img_top;
    for (int k = 3; k <= 2 * n - 1; k += 2)
        ok = ok && torus_restriction(coh.parse("c" + std::to_string(k))).is_zero();
    r.pass = ok;
    r.witness = "defining relations normalize to 0 (both sign conventions); torus images agree";
    if (!ok) r.witness += " FAILED";
    return r;
}

CheckResult check_classmap_multiplicative(int n) {
    CheckResult r{"classmap-multiplicative", false, ""};
    std::mt19937_64 rng(0xcafe0000ull + static_cast<unsigned>(n));
    ChowRing chow(n);
    bool ok = class_map(chow.parse("y*y")) == class_map(chow.parse("y")) * class_map(chow.parse("y"));
    for (int t = 0; t < 8; ++t) {
        ChowElement a = chow.normalize(random_poly(rng, 2 * n, 5, 2, 9));
        ChowElement b = chow.normalize(random_poly(rng, 2 * n, 5, 2, 9));
        ok = ok && class_map(a * b) == class_map(a) * class_map(b);
        ok = ok && class_map(a + b) == class_map(a) + class_map(b);
    }
    r.pass = ok;
    r.witness = "y^2 image consistent; 8 random pairs multiplicative and additive";
    if (!ok) r.witness += " FAILED";
    return r;
}

CheckResult check_rewrite_confluence(int n) {
    CheckResult r{"rewrite-confluence", false, ""};
    std::mt19937_64 rng(0xfade0000ull + static_cast<unsigned>(n));
    ChowRing chow(n);
    int nv = 2 * n;
    int y = 2 * n - 1;
    Int s = n % 2 == 0 ? 1 : -1;
    // generators of the relation ideal
    std::vector<MultiPoly> relations;
    for (int k = 3; k <= 2 * n - 1; k += 2) {
        int ci = k - 2;
        relations.push_back(MultiPoly::from_terms(nv, {{Monomial::variable(ci, 1), 2}}));
        relations.push_back(MultiPoly::from_terms(
            nv, {{Monomial::variable(ci, 1) * Monomial::variable(y, 1), 1}}));
    }
    relations.push_back(MultiPoly::from_terms(
        nv, {{Monomial::variable(y, 2), 1}, {Monomial::variable(nv - 2, 1), -s * pow2(2 * n - 2)}}));
    std::uniform_int_distribution<std::size_t> pick(0, relations.size() - 1);
    bool ok = true;
    for (int t = 0; t < 6; ++t) {
        MultiPoly raw = random_poly(rng, nv, 6, 2, 15);
        MultiPoly perturbed = raw;
        for (int j = 0; j < 3; ++j) {
            MultiPoly cofactor = random_poly(rng, nv, 2, 1, 3);
            perturbed += relations[pick(rng)] * cofactor;
        }
        ok = ok && chow.normalize(perturbed) == chow.normalize(raw);
    }
    r.pass = ok;
    r.witness = "normal form unchanged by 6 random ideal-member perturbations";
    if (!ok) r.witness += " FAILED";
    return r;
}

CheckResult check_self_dual_chern_split(int n) {
    CheckResult r{"self-dual-chern-split", false, ""};
    SelfDualChernReport rep = self_dual_chern_report(n);
    CohRing coh(n);
    CohElement x = rep.d * coh.parse("e") + rep.p;
    MultiPoly direct = total_chern(weights_dplus_extreme(n)).homogeneous_part(n);
    Int mag = rep.d < 0 ? -rep.d : rep.d;
    r.pass = torus_restriction(x) == direct && rep.d == euler_coefficient_product(n) &&
             mag == euler_coefficient_closed(n);
    r.witness = "degree-n part of the extreme-weight product = d*e + p, d = " + rep.d.str();
    if (!r.pass) r.witness += " FAILED";
    return r;
}

CheckResult check_generator_section_roundtrip(int n) {
    CheckResult r{"generator-section-roundtrip", false, ""};
    std::mt19937_64 rng(0x600d0000ull + static_cast<unsigned>(n));
    bool ok = true;
    for (int t = 0; t < 5; ++t) {
        MultiPoly f = random_invariant(rng, n, 8);
        ok = ok && torus_restriction(express_in_generators(f, n)) == f;
    }
    r.pass = ok;
    r.witness = "5 random invariants survive express -> restrict";
    if (!ok) r.witness += " FAILED";
    return r;
}

CheckResult check_odd_chern_vanishing(int n) {
    CheckResult r{"odd-chern-vanishing", false, ""};
    MultiPoly c = total_chern(weights_standard(n));
    bool ok = true;
    for (const auto& [m, coeff] : c.terms()) ok = ok && m.total_degree() % 2 == 0;
    MultiPoly direct = MultiPoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        direct *= MultiPoly::constant(n, 1) -
                  MultiPoly::from_terms(n, {{Monomial::variable(i, 2), 1}});
    ok = ok && c == direct;
    r.pass = ok;
    r.witness = "standard-rep total Chern class == prod(1 - z_i^2): odd parts vanish";
    if (!ok) r.witness += " FAILED";
    return r;
}

CheckResult check_pairing_audit(int n) {
    CheckResult r{"pairing-audit", false, ""};
    bool ok = true;
    for (int i = 1; i <= n - 1; ++i) ok = ok && pairing_audit(n, i) == i;
    r.pass = ok;
    r.witness = "stage i leaves exactly i unpaired factors, i = 1.." + std::to_string(n - 1);
    if (!ok) r.witness += " FAILED";
    return r;
}

CheckResult check_even_sign_symmetry(int n) {
    CheckResult r{"even-sign-symmetry", false, ""};
    std::mt19937_64 rng(0x5e7e0000ull + static_cast<unsigned>(n));
    MultiPoly c = total_chern(weights_dplus_extreme(n));
    bool ok = is_weyl_d_invariant(c, n);
    auto group = enumerate_weyl_d(n);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int t = 0; t < 5; ++t) ok = ok && act(group[pick(rng)], c) == c;
    r.pass = ok;
    r.witness = "extreme-weight product fixed by W(D_n) generators and 5 random elements";
    if (!ok) r.witness += " FAILED";
    return r;
}

CheckResult check_non_divisibility(int n) {
    CheckResult r{"non-divisibility", false, ""};
    ChowRing chow(n);
    int y = chow.basis().top_index();
    auto basis = chow.basis_monomials(n);
    bool ok = !basis.empty();
    for (const auto& m : basis) {
        ChowElement doubled = chow.normalize(MultiPoly::from_terms(2 * n, {{m, 2}}));
        ok = ok && mod2(doubled.body().coefficient(Monomial::variable(y, 1))) == 0;
    }
    r.pass = ok;
    r.witness = "2x has even y-coefficient for every degree-n basis monomial x (" +
                std::to_string(basis.size()) + " checked), so 2x == y has no solution";
    if (!ok) r.witness += " FAILED";
    return r;
}

struct Entry {
    const char* name;
    int min_n;
    int max_n;
    CheckResult (*fn)(int);
};

constexpr Entry kRegistry[] = {
    {"weyl-enumeration-order", 2, 6, check_weyl_enumeration_order},
    {"group-action-composition", 2, 6, check_group_action_composition},
    {"d-coefficient-agreement", 2, 10, check_d_coefficient_agreement},
    {"staircase-pushforward", 2, 6, check_staircase_pushforward},
    {"projection-formula", 2, 5, check_projection_formula},
    {"relation-images-vanish", 2, 6, check_relation_images_vanish},
    {"classmap-multiplicative", 2, 6, check_classmap_multiplicative},
    {"rewrite-confluence", 2, 6, check_rewrite_confluence},
    {"self-dual-chern-split", 2, 4, check_self_dual_chern_split},
    {"generator-section-roundtrip", 2, 4, check_generator_section_roundtrip},
    {"odd-chern-vanishing", 2, 8, check_odd_chern_vanishing},
    {"pairing-audit", 2, 8, check_pairing_audit},
    {"even-sign-symmetry", 2, 6, check_even_sign_symmetry},
    {"non-divisibility", 2, 5, check_non_divisibility},
};

} // namespace

VerifyReport run_checks(int n) {
    if (n < kMinRank || n > kMaxRank)
        throw std::invalid_argument("verify: rank out of range (" +
                                    std::to_string(kMinRank) + ".." +
                                    std::to_string(kMaxRank) + ")");
    VerifyReport report;
    report.n = n;
    for (const Entry& entry : kRegistry)
        if (entry.min_n <= n && n <= entry.max_n) report.checks.push_back(entry.fn(n));
    return report;
}

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const Entry& entry : kRegistry) names.push_back(entry.name);
    return names;
}

} // namespace chowbso::verify
