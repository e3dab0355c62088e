// Variable alphabets: the bridge between anonymous variable indices and the
// names used for parsing and printing (z1..zn, p1..pn, or ring generators).
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chowbso {

class VariableAlphabet {
public:
    explicit VariableAlphabet(std::vector<std::string> names);

    // z1..zn — torus / weight coordinates
    static VariableAlphabet z(int n);
    // p1..pn — elementary symmetric functions in the squared coordinates
    static VariableAlphabet p(int n);
    // c2..c{2n}, y — Chow ring generators of rank n
    static VariableAlphabet chow(int n);
    // c2..c{2n}, e — cohomology subring generators of rank n
    static VariableAlphabet cohomology(int n);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int index) const { return names_.at(index); }
    std::optional<int> index_of(std::string_view name) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

} // namespace chowbso
