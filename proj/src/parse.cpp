#include <cctype>
#include <cstdint>
#include <string>

#include "ag/errors.hpp"
#include "ag/polynomial.hpp"

namespace ag {

namespace {

// Recursive-descent parser for the grammar
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { '*' factor }
//   factor  := primary [ '^' natural ]
//   primary := rational | variable | '(' expr ')'
//   rational:= natural [ '/' natural ]
// Whitespace is insignificant.
class Parser {
  public:
    Parser(const std::string& text, std::vector<std::string> vars)
        : text_(text), vars_(std::move(vars)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Polynomial p = term();
        if (neg) p = -p;
        while (true) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                break;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial p = primary();
        if (accept('^')) {
            std::size_t at = pos_;
            skip_ws();
            unsigned long e = natural("exponent");
            if (e > 1u << 20)
                throw ParseError("exponent too large", at);
            p = p.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    Polynomial primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return variable();
        throw ParseError("expected a number, variable, or '('", pos_);
    }

    Polynomial rational() {
        Rational value = Rational::from_string(digits("number"));
        if (accept('/')) {
            std::size_t at = pos_;
            skip_ws();
            Rational den = Rational::from_string(digits("denominator"));
            if (den.is_zero()) throw ParseError("zero denominator", at);
            value /= den;
        }
        return Polynomial::constant(vars_, value);
    }

    unsigned long natural(const char* what) {
        std::size_t start = pos_;
        std::string d = digits(what);
        if (d.size() > 7) throw ParseError(std::string(what) + " too large", start);
        return std::stoul(d);
    }

    std::string digits(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        std::string d;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            d += text_[pos_];
            ++pos_;
        }
        if (d.empty()) throw ParseError(std::string("expected ") + what, start);
        return d;
    }

    Polynomial variable() {
        std::size_t start = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
            name += text_[pos_];
            ++pos_;
        }
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return Polynomial::variable(vars_, i);
        throw UnknownVariable(name, start);
    }

    const std::string& text_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            std::vector<std::string> vars) {
    return Parser(text, std::move(vars)).run();
}

}  // namespace ag
