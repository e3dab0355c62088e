#include "chowbso/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace chowbso {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("polynomial: negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, Int value) {
    MultiPoly p(nvars);
    if (value != 0) p.terms_.emplace(Monomial(), std::move(value));
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    MultiPoly p(nvars);
    Monomial m = Monomial::variable(index);
    p.check_monomial(m);
    p.terms_.emplace(std::move(m), 1);
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<std::pair<Monomial, Int>> terms) {
    MultiPoly p(nvars);
    for (auto& [m, c] : terms) p.add_term(m, std::move(c));
    return p;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // graded order: the map's last key has maximal degree
    return terms_.rbegin()->first.total_degree();
}

Int MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

bool MultiPoly::is_multilinear() const {
    for (const auto& [m, c] : terms_)
        if (!m.is_multilinear()) return false;
    return true;
}

bool MultiPoly::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != degree) return false;
    return true;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == degree) out.terms_.emplace(m, c);
    return out;
}

void MultiPoly::check_same_vars(const MultiPoly& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("polynomial: variable count mismatch");
}

void MultiPoly::check_monomial(const Monomial& m) const {
    if (m.max_var_index() >= nvars_)
        throw std::invalid_argument("polynomial: variable index out of range");
}

void MultiPoly::add_term(const Monomial& m, Int c) {
    if (c == 0) return;
    check_monomial(m);
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_same_vars(rhs);
    for (const auto& [m, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_same_vars(rhs);
    for (const auto& [m, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly& MultiPoly::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
    } else {
        for (auto& [m, c] : terms_) c *= scalar;
    }
    return *this;
}

namespace {

// Packed-key fast path for large products: when every variable's exponent in
// the result provably fits in a fixed bit field and all fields fit in 64
// bits, monomial multiplication becomes one integer addition and terms
// accumulate in a hash map. The canonical std::map is rebuilt at the end, so
// results are bit-identical to the naive path.
struct Packing {
    int bits = 0;
    bool ok = false;
};

Packing plan_packing(const MultiPoly& a, const MultiPoly& b) {
    Packing pk;
    if (a.nvars() == 0) return pk;
    int max_exp = 0;
    std::vector<int> amax(a.nvars(), 0), bmax(b.nvars(), 0);
    for (const auto& [m, c] : a.terms())
        for (const auto& [idx, exp] : m.entries()) amax[idx] = std::max(amax[idx], exp);
    for (const auto& [m, c] : b.terms())
        for (const auto& [idx, exp] : m.entries()) bmax[idx] = std::max(bmax[idx], exp);
    for (int i = 0; i < a.nvars(); ++i) max_exp = std::max(max_exp, amax[i] + bmax[i]);
    pk.bits = std::bit_width(static_cast<unsigned>(max_exp));
    if (pk.bits == 0) pk.bits = 1;
    pk.ok = pk.bits * a.nvars() <= 64;
    return pk;
}

std::uint64_t pack_monomial(const Monomial& m, int bits) {
    std::uint64_t key = 0;
    for (const auto& [idx, exp] : m.entries())
        key |= static_cast<std::uint64_t>(exp) << (idx * bits);
    return key;
}

Monomial unpack_monomial(std::uint64_t key, int bits, int nvars) {
    std::vector<Monomial::Entry> entries;
    std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
    for (int i = 0; i < nvars; ++i) {
        int exp = static_cast<int>((key >> (i * bits)) & mask);
        if (exp > 0) entries.emplace_back(i, exp);
    }
    return Monomial(std::move(entries));
}

MultiPoly mul_packed(const MultiPoly& a, const MultiPoly& b, int bits) {
    std::vector<std::pair<std::uint64_t, const Int*>> pa, pb;
    pa.reserve(a.term_count());
    pb.reserve(b.term_count());
    for (const auto& [m, c] : a.terms()) pa.emplace_back(pack_monomial(m, bits), &c);
    for (const auto& [m, c] : b.terms()) pb.emplace_back(pack_monomial(m, bits), &c);

    std::unordered_map<std::uint64_t, Int> acc;
    acc.reserve(pa.size() * 2);
    for (const auto& [ka, ca] : pa)
        for (const auto& [kb, cb] : pb)
            acc[ka + kb] += (*ca) * (*cb);

    std::vector<std::pair<Monomial, Int>> out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc)
        if (c != 0) out.emplace_back(unpack_monomial(key, bits, a.nvars()), std::move(c));
    return MultiPoly::from_terms(a.nvars(), std::move(out));
}

} // namespace

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    lhs.check_same_vars(rhs);
    MultiPoly out(lhs.nvars_);
    if (lhs.is_zero() || rhs.is_zero()) return out;

    if (lhs.term_count() * rhs.term_count() >= 1024) {
        Packing pk = plan_packing(lhs, rhs);
        if (pk.ok) return mul_packed(lhs, rhs, pk.bits);
    }
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

std::pair<Monomial, Int> MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("polynomial: leading term of zero");
    return *terms_.rbegin();
}

namespace {

// Merge two sorted exponent lists; false if any resulting exponent is >= 2.
bool squarefree_product(const Monomial& a, const Monomial& b, Monomial& out) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::vector<Monomial::Entry> merged;
    merged.reserve(ea.size() + eb.size());
    auto i = ea.begin();
    auto j = eb.begin();
    while (i != ea.end() && j != eb.end()) {
        if (i->first < j->first) {
            if (i->second > 1) return false;
            merged.push_back(*i++);
        } else if (j->first < i->first) {
            if (j->second > 1) return false;
            merged.push_back(*j++);
        } else {
            return false; // shared variable: exponent >= 2
        }
    }
    for (; i != ea.end(); ++i) {
        if (i->second > 1) return false;
        merged.push_back(*i);
    }
    for (; j != eb.end(); ++j) {
        if (j->second > 1) return false;
        merged.push_back(*j);
    }
    out = Monomial(std::move(merged));
    return true;
}

} // namespace

MultiPoly mul_multilinear_truncated(const MultiPoly& lhs, const MultiPoly& rhs) {
    if (lhs.nvars() != rhs.nvars())
        throw std::invalid_argument("polynomial: variable count mismatch");
    int n = lhs.nvars();

    // Bitmask fast path: square-free monomials in <= 64 variables are subsets.
    if (n <= 64 && lhs.is_multilinear() && rhs.is_multilinear()) {
        std::vector<std::pair<std::uint64_t, const Int*>> pa, pb;
        pa.reserve(lhs.term_count());
        pb.reserve(rhs.term_count());
        for (const auto& [m, c] : lhs.terms()) pa.emplace_back(pack_monomial(m, 1), &c);
        for (const auto& [m, c] : rhs.terms()) pb.emplace_back(pack_monomial(m, 1), &c);
        std::unordered_map<std::uint64_t, Int> acc;
        acc.reserve(pa.size() * 2);
        for (const auto& [ka, ca] : pa)
            for (const auto& [kb, cb] : pb) {
                if (ka & kb) continue;
                acc[ka | kb] += (*ca) * (*cb);
            }
        std::vector<std::pair<Monomial, Int>> out;
        out.reserve(acc.size());
        for (auto& [key, c] : acc)
            if (c != 0) out.emplace_back(unpack_monomial(key, 1, n), std::move(c));
        return MultiPoly::from_terms(n, std::move(out));
    }

    // General inputs: keep exactly the pair products that land square-free,
    // which agrees with truncate_multilinear(lhs * rhs) term by term.
    MultiPoly out(n);
    Monomial prod;
    for (const auto& [ma, ca] : lhs.terms())
        for (const auto& [mb, cb] : rhs.terms())
            if (squarefree_product(ma, mb, prod)) out.add_term(prod, ca * cb);
    return out;
}

MultiPoly truncate_multilinear(const MultiPoly& p) {
    MultiPoly out(p.nvars());
    for (const auto& [m, c] : p.terms())
        if (m.is_multilinear()) out.add_term(m, c);
    return out;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("polynomial: variable count mismatch");
    if (b.is_zero()) throw std::invalid_argument("polynomial: division by zero");

    MultiPoly q(a.nvars());
    MultiPoly r = a;
    const auto [mb, cb] = b.leading_term();
    while (!r.is_zero()) {
        const auto [mr, cr] = r.leading_term();
        if (!mb.divides(mr) || cr % cb != 0)
            throw NonDivisibleError("polynomial: exact_div has nonzero remainder", q, r);
        Monomial mt = mr.divided_by(mb);
        Int ct = cr / cb;
        MultiPoly t(a.nvars());
        t.add_term(mt, ct);
        q += t;
        r -= t * b;
    }
    return q;
}

Int coefficient_of(const MultiPoly& p, const Monomial& m) {
    return p.coefficient(m);
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw std::invalid_argument("substitute: one image per variable required");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& img : images)
        if (img.nvars() != out_vars)
            throw std::invalid_argument("substitute: images disagree on variable count");

    MultiPoly out(out_vars);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(out_vars, c);
        for (const auto& [idx, exp] : m.entries())
            term *= poly_pow(images[idx], static_cast<unsigned>(exp));
        out += term;
    }
    return out;
}

MultiPoly poly_pow(const MultiPoly& base, unsigned exponent) {
    MultiPoly result = MultiPoly::constant(base.nvars(), 1);
    MultiPoly sq = base;
    while (exponent > 0) {
        if (exponent & 1) result *= sq;
        exponent >>= 1;
        if (exponent > 0) sq *= sq;
    }
    return result;
}

} // namespace chowbso
