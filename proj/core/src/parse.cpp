#include "chowbso/parse.hpp"

#include <algorithm>
#include <cctype>

namespace chowbso {

namespace {

constexpr int kMaxExponent = 1 << 16;

class Parser {
public:
    Parser(std::string_view text, const VariableAlphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    MultiPoly run() {
        MultiPoly result = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return result;
    }

private:
    int nvars() const { return alphabet_.size(); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    MultiPoly parse_expr() {
        MultiPoly acc = parse_term();
        for (;;) {
            if (accept('+')) acc += parse_term();
            else if (accept('-')) acc -= parse_term();
            else return acc;
        }
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_unary();
        while (accept('*')) acc *= parse_unary();
        return acc;
    }

    MultiPoly parse_unary() {
        if (accept('-')) return -parse_unary();
        return parse_power();
    }

    MultiPoly parse_power() {
        MultiPoly base = parse_atom();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected a non-negative integer exponent", pos_);
        long long exp = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            exp = exp * 10 + (text_[pos_] - '0');
            if (exp >= kMaxExponent)
                throw ParseError("exponent overflow (must be < 2^16)", start);
            ++pos_;
        }
        return poly_pow(base, static_cast<unsigned>(exp));
    }

    MultiPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = parse_expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_integer();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    MultiPoly parse_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Int value(std::string(text_.substr(start, pos_ - start)));
        return MultiPoly::constant(nvars(), value);
    }

    MultiPoly parse_variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto idx = alphabet_.index_of(name);
        if (!idx) throw ParseError("unknown variable '" + name + "'", start);
        return MultiPoly::variable(nvars(), *idx);
    }

    std::string_view text_;
    const VariableAlphabet& alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(std::string_view text, const VariableAlphabet& alphabet) {
    return Parser(text, alphabet).run();
}

std::string format_poly(const MultiPoly& p, const VariableAlphabet& alphabet) {
    if (p.is_zero()) return "0";

    // Print order: ascending total degree, then descending lex. The term map
    // is graded-lex ascending, so within each degree we reverse.
    std::vector<const std::pair<const Monomial, Int>*> order;
    order.reserve(p.term_count());
    for (const auto& term : p.terms()) order.push_back(&term);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
        int da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db) return da < db;
        return b->first < a->first;
    });

    std::string out;
    bool first = true;
    for (const auto* term : order) {
        const auto& [m, c] = *term;
        bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        bool need_coeff = m.is_constant() || mag != 1;
        if (need_coeff) out += mag.str();
        bool need_star = need_coeff;
        for (const auto& [idx, exp] : m.entries()) {
            if (need_star) out += '*';
            out += alphabet.name(idx);
            if (exp >= 2) {
                out += '^';
                out += std::to_string(exp);
            }
            need_star = true;
        }
    }
    return out;
}

} // namespace chowbso
