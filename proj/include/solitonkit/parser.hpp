#pragma once

// Infix expression text:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' unary)?
//   primary := number | coordinate | func '(' expr ')' | '(' expr ')'
//   func    := exp | log | sin | cos
//
// Exponents must fold to a rational constant. `pi` is accepted as a constant.

#include <cctype>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <string_view>

#include "solitonkit/expr.hpp"

namespace solitonkit {

namespace detail {

// Closest rational with a small denominator, or none.
inline bool to_rational(double v, Rational& out) {
    for (long den = 1; den <= 1000; ++den) {
        const double num = std::round(v * static_cast<double>(den));
        if (std::abs(num / static_cast<double>(den) - v) <= 1e-12 * (1.0 + std::abs(v))) {
            out = Rational::make(static_cast<long>(num), den);
            return true;
        }
    }
    return false;
}

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> coords) : text_(text), coords_(coords) {}

    Expr parse() {
        Expr e = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expression '" + std::string(text_) + "': " + what, 1, static_cast<int>(pos_) + 1);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = lhs + term();
            else if (accept('-'))
                lhs = lhs - term();
            else
                return lhs;
        }
    }

    Expr term() {
        Expr lhs = unary();
        for (;;) {
            if (accept('*'))
                lhs = lhs * unary();
            else if (accept('/'))
                lhs = lhs / unary();
            else
                return lhs;
        }
    }

    Expr unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (!accept('^')) return base;
        const std::size_t at = pos_;
        Expr ex = unary();
        if (!ex.is_constant()) {
            pos_ = at;
            fail("exponent must be a constant");
        }
        Rational r;
        if (!to_rational(ex.constant_value(), r)) {
            pos_ = at;
            fail("exponent must be rational with denominator <= 1000");
        }
        return solitonkit::pow(base, r);
    }

    Expr primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Expr number() {
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        double v = 0.0;
        auto res = std::from_chars(begin, end, v);
        if (res.ec != std::errc()) fail("malformed number");
        pos_ += static_cast<std::size_t>(res.ptr - begin);
        return constant(v);
    }

    Expr identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        skip();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            Expr arg = expr();
            if (!accept(')')) fail("expected ')' after argument of " + name);
            if (name == "exp") return solitonkit::exp(arg);
            if (name == "log") return solitonkit::log(arg);
            if (name == "sin") return solitonkit::sin(arg);
            if (name == "cos") return solitonkit::cos(arg);
            pos_ = start;
            fail("unknown function '" + name + "'");
        }
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i] == name) return coordinate(static_cast<int>(i), name);
        if (name == "pi") return constant(std::numbers::pi);
        pos_ = start;
        fail("unknown identifier '" + name + "'");
    }

    std::string_view text_;
    std::span<const std::string> coords_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses infix text over the named coordinates. Throws ParseError with the
/// 1-based column of the offending character.
inline Expr parse_expr(std::string_view text, std::span<const std::string> coords) {
    return detail::Parser(text, coords).parse();
}

}  // namespace solitonkit
