#include "chowbso/alphabet.hpp"

#include <stdexcept>

namespace chowbso {

VariableAlphabet::VariableAlphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("alphabet: empty variable name");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("alphabet: duplicate variable name " + names_[i]);
    }
}

static std::vector<std::string> numbered(const char* stem, int n) {
    if (n < 0) throw std::invalid_argument("alphabet: negative variable count");
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

VariableAlphabet VariableAlphabet::z(int n) { return VariableAlphabet(numbered("z", n)); }
VariableAlphabet VariableAlphabet::p(int n) { return VariableAlphabet(numbered("p", n)); }

// Chow and cohomology alphabets share the layout c2..c{2n} at indices
// 0..2n-2, with the rank-n generator (y resp. e) last at index 2n-1.
static std::vector<std::string> ring_names(int n, const char* last) {
    if (n < 1) throw std::invalid_argument("alphabet: ring rank must be >= 1");
    std::vector<std::string> names;
    names.reserve(2 * n);
    for (int k = 2; k <= 2 * n; ++k) names.push_back("c" + std::to_string(k));
    names.push_back(last);
    return names;
}

VariableAlphabet VariableAlphabet::chow(int n) { return VariableAlphabet(ring_names(n, "y")); }
VariableAlphabet VariableAlphabet::cohomology(int n) { return VariableAlphabet(ring_names(n, "e")); }

std::optional<int> VariableAlphabet::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

} // namespace chowbso
