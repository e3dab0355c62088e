#include "chowbso/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowbso {

Monomial::Monomial(std::vector<Entry> entries) {
    for (auto& [idx, exp] : entries) {
        if (idx < 0) throw std::invalid_argument("monomial: negative variable index");
        if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
    }
    std::sort(entries.begin(), entries.end());
    for (auto& [idx, exp] : entries) {
        if (exp == 0) continue;
        if (!entries_.empty() && entries_.back().first == idx)
            entries_.back().second += exp;
        else
            entries_.emplace_back(idx, exp);
    }
}

Monomial Monomial::variable(int index, int exponent) {
    return Monomial({{index, exponent}});
}

int Monomial::exponent(int index) const {
    for (const auto& [idx, exp] : entries_)
        if (idx == index) return exp;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [idx, exp] : entries_) d += exp;
    return d;
}

int Monomial::max_var_index() const {
    return entries_.empty() ? -1 : entries_.back().first;
}

bool Monomial::is_multilinear() const {
    for (const auto& [idx, exp] : entries_)
        if (exp > 1) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + rhs.entries_.size());
    auto a = entries_.begin();
    auto b = rhs.entries_.begin();
    while (a != entries_.end() && b != rhs.entries_.end()) {
        if (a->first < b->first) out.entries_.push_back(*a++);
        else if (b->first < a->first) out.entries_.push_back(*b++);
        else {
            out.entries_.emplace_back(a->first, a->second + b->second);
            ++a; ++b;
        }
    }
    out.entries_.insert(out.entries_.end(), a, entries_.end());
    out.entries_.insert(out.entries_.end(), b, rhs.entries_.end());
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end()) {
        while (b != other.entries_.end() && b->first < a->first) ++b;
        if (b == other.entries_.end() || b->first != a->first || b->second < a->second)
            return false;
        ++a;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& rhs) const {
    Monomial out;
    auto a = entries_.begin();
    auto b = rhs.entries_.begin();
    while (a != entries_.end()) {
        if (b != rhs.entries_.end() && b->first == a->first) {
            int diff = a->second - b->second;
            if (diff < 0) throw std::invalid_argument("monomial: divided_by without divisibility");
            if (diff > 0) out.entries_.emplace_back(a->first, diff);
            ++a; ++b;
        } else if (b != rhs.entries_.end() && b->first < a->first) {
            throw std::invalid_argument("monomial: divided_by without divisibility");
        } else {
            out.entries_.push_back(*a++);
        }
    }
    if (b != rhs.entries_.end())
        throw std::invalid_argument("monomial: divided_by without divisibility");
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& rhs) const {
    int da = total_degree(), db = rhs.total_degree();
    if (da != db) return da <=> db;
    // Same degree: lexicographic, z1 most significant. Walk both sparse lists;
    // at the first variable index where exponents differ, the larger exponent
    // makes the larger monomial.
    auto a = entries_.begin();
    auto b = rhs.entries_.begin();
    while (a != entries_.end() || b != rhs.entries_.end()) {
        int ia = (a != entries_.end()) ? a->first : INT32_MAX;
        int ib = (b != rhs.entries_.end()) ? b->first : INT32_MAX;
        if (ia < ib) return std::strong_ordering::greater;  // lhs has exponent, rhs has 0
        if (ib < ia) return std::strong_ordering::less;
        if (a->second != b->second) return a->second <=> b->second;
        ++a; ++b;
    }
    return std::strong_ordering::equal;
}

} // namespace chowbso
