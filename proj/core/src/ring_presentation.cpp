#include "chowbso/ring_presentation.hpp"

#include <stdexcept>

#include "chowbso/euler_coefficient.hpp"
#include "chowbso/invariant_decomposition.hpp"
#include "chowbso/parse.hpp"
#include "chowbso/weight_system.hpp"

namespace chowbso {

RingBasis::RingBasis(int n, E2Sign sign) : n_(n), sign_(sign) {
    if (n < 1) throw std::invalid_argument("ring: rank must be >= 1");
}

int RingBasis::c_index(int k) const {
    if (k < 2 || k > 2 * n_) throw std::invalid_argument("ring: no generator c_k for this k");
    return k - 2;
}

int RingBasis::degree_of(const Monomial& m) const {
    int d = 0;
    for (const auto& [idx, exp] : m.entries())
        d += exp * (idx == top_index() ? n_ : idx + 2);
    return d;
}

bool RingBasis::has_odd_c(const Monomial& m) const {
    for (const auto& [idx, exp] : m.entries()) {
        if (idx == top_index()) continue;
        if ((idx + 2) % 2 != 0) return true;
    }
    return false;
}

namespace {

// Sign s of the e^2 = s*c_{2n} rewrite; the y^2 rewrite carries s*2^{2n-2}.
int rewrite_sign(const RingBasis& basis) {
    if (basis.e2_sign() == E2Sign::plus) return 1;
    return basis.rank() % 2 == 0 ? 1 : -1;
}

Monomial strip_top(const Monomial& m, int top_index) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [idx, exp] : m.entries())
        if (idx != top_index) entries.emplace_back(idx, exp);
    return Monomial(std::move(entries));
}

// Shared normalization engine. top_square is the image of y^2 resp. e^2 as
// (coefficient, extra c_{2n} exponent 1); kill_top_odd selects the y*c_odd -> 0
// rule, which only the Chow presentation has.
MultiPoly normalize_body(const MultiPoly& raw, const RingBasis& basis, bool kill_top_odd) {
    const int top = basis.top_index();
    const int c2n = basis.nvars() - 2; // index of c_{2n}
    Int top_square_coeff = rewrite_sign(basis);
    if (kill_top_odd) top_square_coeff *= pow2(static_cast<unsigned>(2 * basis.rank() - 2));

    MultiPoly out(basis.nvars());
    for (const auto& [m, c] : raw.terms()) {
        int k = m.exponent(top);
        Monomial rest = strip_top(m, top);
        Int coeff = c;
        if (k >= 2) {
            // y^(2q+r) = (y^2)^q * y^r with y^2 -> top_square_coeff * c_{2n}
            int q = k / 2;
            for (int t = 0; t < q; ++t) coeff *= top_square_coeff;
            rest = rest * Monomial::variable(c2n, q);
            k %= 2;
        }
        if (kill_top_odd && k == 1 && basis.has_odd_c(rest)) continue;
        Monomial full = k == 1 ? rest * Monomial::variable(top) : rest;
        out.add_term(full, coeff);
    }

    // mod-2 pass on odd-c monomials, after accumulation
    MultiPoly reduced(basis.nvars());
    for (const auto& [m, c] : out.terms())
        reduced.add_term(m, basis.has_odd_c(m) ? mod2(c) : c);
    return reduced;
}

} // namespace

ChowElement ChowRing::normalize(const MultiPoly& raw) const {
    if (raw.nvars() != basis_.nvars())
        throw std::invalid_argument("chow normalize: variable count mismatch");
    return ChowElement(*this, normalize_body(raw, basis_, /*kill_top_odd=*/true));
}

CohElement CohRing::normalize(const MultiPoly& raw) const {
    if (raw.nvars() != basis_.nvars())
        throw std::invalid_argument("cohomology normalize: variable count mismatch");
    return CohElement(*this, normalize_body(raw, basis_, /*kill_top_odd=*/false));
}

ChowElement ChowRing::parse(std::string_view text) const {
    return normalize(parse_poly(text, alphabet()));
}

CohElement CohRing::parse(std::string_view text) const {
    return normalize(parse_poly(text, alphabet()));
}

ChowElement ChowRing::zero() const { return ChowElement(*this, MultiPoly(basis_.nvars())); }
ChowElement ChowRing::one() const {
    return ChowElement(*this, MultiPoly::constant(basis_.nvars(), 1));
}
CohElement CohRing::zero() const { return CohElement(*this, MultiPoly(basis_.nvars())); }
CohElement CohRing::one() const {
    return CohElement(*this, MultiPoly::constant(basis_.nvars(), 1));
}

namespace {

// All monomials in c2..c{2n} (optionally times the top generator) of the
// given graded degree; depth-first over the c-exponents.
void enumerate_c_monomials(const RingBasis& basis, int k, int remaining,
                           std::vector<Monomial::Entry>& acc,
                           std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (k > 2 * basis.rank()) return;
    int max_exp = remaining / k;
    for (int exp = 0; exp <= max_exp; ++exp) {
        if (exp > 0) acc.emplace_back(basis.c_index(k), exp);
        enumerate_c_monomials(basis, k + 1, remaining - exp * k, acc, out);
        if (exp > 0) acc.pop_back();
    }
}

std::vector<Monomial> basis_monomials_impl(const RingBasis& basis, int degree,
                                           bool kill_top_odd) {
    if (degree < 0) return {};
    std::vector<Monomial> out;
    std::vector<Monomial::Entry> acc;
    enumerate_c_monomials(basis, 2, degree, acc, out);
    if (degree >= basis.rank()) {
        std::vector<Monomial> c_part;
        enumerate_c_monomials(basis, 2, degree - basis.rank(), acc, c_part);
        Monomial top = Monomial::variable(basis.top_index());
        for (const auto& m : c_part) {
            if (kill_top_odd && basis.has_odd_c(m)) continue;
            out.push_back(m * top);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Monomial> ChowRing::basis_monomials(int degree) const {
    return basis_monomials_impl(basis_, degree, /*kill_top_odd=*/true);
}

std::vector<Monomial> CohRing::basis_monomials(int degree) const {
    return basis_monomials_impl(basis_, degree, /*kill_top_odd=*/false);
}

namespace {

template <typename Element>
void check_same_ring(const Element& a, const Element& b) {
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("ring arithmetic: rank or sign convention mismatch");
}

template <typename Ring>
int graded_degree(const Ring& ring, const MultiPoly& body) {
    int d = -1;
    for (const auto& [m, c] : body.terms())
        d = std::max(d, ring.basis().degree_of(m));
    return d;
}

template <typename Ring>
MultiPoly graded_part(const Ring& ring, const MultiPoly& body, int degree) {
    MultiPoly out(body.nvars());
    for (const auto& [m, c] : body.terms())
        if (ring.basis().degree_of(m) == degree) out.add_term(m, c);
    return out;
}

} // namespace

int ChowElement::degree() const { return graded_degree(ring_, body_); }
int CohElement::degree() const { return graded_degree(ring_, body_); }

ChowElement ChowElement::homogeneous_part(int degree) const {
    return ring_.normalize(graded_part(ring_, body_, degree));
}

CohElement CohElement::homogeneous_part(int degree) const {
    return ring_.normalize(graded_part(ring_, body_, degree));
}

std::string ChowElement::to_string() const { return format_poly(body_, ring_.alphabet()); }
std::string CohElement::to_string() const { return format_poly(body_, ring_.alphabet()); }

ChowElement operator+(const ChowElement& a, const ChowElement& b) {
    check_same_ring(a, b);
    return a.ring_.normalize(a.body_ + b.body_);
}
ChowElement operator-(const ChowElement& a, const ChowElement& b) {
    check_same_ring(a, b);
    return a.ring_.normalize(a.body_ - b.body_);
}
ChowElement operator*(const ChowElement& a, const ChowElement& b) {
    check_same_ring(a, b);
    return a.ring_.normalize(a.body_ * b.body_);
}
ChowElement operator*(const Int& s, const ChowElement& a) {
    return a.ring_.normalize(a.body_ * s);
}

CohElement operator+(const CohElement& a, const CohElement& b) {
    check_same_ring(a, b);
    return a.ring_.normalize(a.body_ + b.body_);
}
CohElement operator-(const CohElement& a, const CohElement& b) {
    check_same_ring(a, b);
    return a.ring_.normalize(a.body_ - b.body_);
}
CohElement operator*(const CohElement& a, const CohElement& b) {
    check_same_ring(a, b);
    return a.ring_.normalize(a.body_ * b.body_);
}
CohElement operator*(const Int& s, const CohElement& a) {
    return a.ring_.normalize(a.body_ * s);
}

CohElement class_map(const ChowElement& x) {
    const RingBasis& basis = x.ring().basis();
    int n = basis.rank();
    Int y_image_coeff = pow2(static_cast<unsigned>(n - 1));
    MultiPoly body(basis.nvars());
    for (const auto& [m, c] : x.body().terms()) {
        // same variable layout: y's slot becomes e's slot
        int k = m.exponent(basis.top_index());
        body.add_term(m, k == 1 ? c * y_image_coeff : c);
    }
    CohRing target(n, basis.e2_sign());
    return target.normalize(body);
}

MultiPoly torus_restriction(const CohElement& x) {
    const RingBasis& basis = x.ring().basis();
    int n = basis.rank();
    std::vector<MultiPoly> images;
    images.reserve(basis.nvars());
    for (int k = 2; k <= 2 * n; ++k) {
        if (k % 2 != 0) {
            images.push_back(MultiPoly(n)); // c_odd -> 0
            continue;
        }
        int j = k / 2;
        MultiPoly img = elementary_symmetric_squares(n, j);
        if (j % 2 != 0) img *= Int(-1);
        images.push_back(std::move(img));
    }
    images.push_back(euler_monomial(n)); // e -> z1*...*zn
    return substitute(x.body(), images);
}

CohElement express_in_generators(const MultiPoly& f, int n) {
    InvariantDecomposition dec = decompose_invariant(f, n); // checks invariance
    CohRing ring(n, E2Sign::consistent);
    const RingBasis& basis = ring.basis();

    // p_j -> (-1)^j c_{2j}
    auto subst = [&](const MultiPoly& p_poly, bool with_e) {
        MultiPoly out(basis.nvars());
        for (const auto& [m, c] : p_poly.terms()) {
            int sign = 1;
            std::vector<Monomial::Entry> entries;
            for (const auto& [idx, exp] : m.entries()) {
                int j = idx + 1;
                entries.emplace_back(basis.c_index(2 * j), exp);
                if (j % 2 != 0 && exp % 2 != 0) sign = -sign;
            }
            if (with_e) entries.emplace_back(basis.top_index(), 1);
            out.add_term(Monomial(std::move(entries)), sign == 1 ? c : -c);
        }
        return out;
    };

    return ring.normalize(subst(dec.a, false) + subst(dec.b, true));
}

SelfDualChernReport self_dual_chern_report(int n) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("self_dual_chern_report: n out of range (2..5)");
    MultiPoly chern = total_chern(weights_dplus_extreme(n));
    CohElement expressed = express_in_generators(chern.homogeneous_part(n), n);

    const RingBasis& basis = expressed.ring().basis();
    MultiPoly c_part(basis.nvars());
    Int d = 0;
    for (const auto& [m, c] : expressed.body().terms()) {
        int k = m.exponent(basis.top_index());
        if (k == 0) {
            c_part.add_term(m, c);
        } else if (m == Monomial::variable(basis.top_index())) {
            d = c;
        } else {
            throw std::logic_error("self_dual_chern_report: unexpected mixed e-term in degree n");
        }
    }
    if (abs(d) != euler_coefficient_closed(n))
        throw std::logic_error("self_dual_chern_report: |d| != 2^{n-1}(n-1)! (internal bug)");
    return {std::move(d), expressed.ring().normalize(c_part)};
}

} // namespace chowbso
