#pragma once

// Recursive-descent parser for polynomial expressions over Q(i).
//
// Grammar (public contract, documented in the CLI help):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' INT)?
//   base   := IDENT | INT ('/' INT)? | 'i' | '(' expr ')' | '-' factor
//
// No implicit multiplication. '^' takes a nonnegative integer literal (cap 64).
// 'i' is the imaginary unit and cannot be used as a variable name.

#include "polyfib/multipoly.hpp"
#include "polyfib/rational.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfib {

enum class TokenKind { IDENT, INT, SLASH, PLUS, MINUS, STAR, CARET, LPAREN, RPAREN, IMAG_UNIT, END };

struct ExprToken {
    TokenKind kind;
    std::string lexeme;
    std::size_t position;  // byte offset into the input
};

struct ParseError : std::runtime_error {
    std::size_t position;
    std::string expected;
    std::string found;

    ParseError(std::size_t pos, std::string exp, std::string fnd)
        : std::runtime_error("parse error at offset " + std::to_string(pos) + ": expected " + exp +
                             ", found " + fnd),
          position(pos),
          expected(std::move(exp)),
          found(std::move(fnd)) {}
};

inline std::vector<ExprToken> tokenize(const std::string& input) {
    std::vector<ExprToken> out;
    std::size_t pos = 0;
    while (pos < input.size()) {
        char c = input[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
            out.push_back({TokenKind::INT, input.substr(start, pos - start), start});
            continue;
        }
        if (c >= 'a' && c <= 'z') {
            ++pos;
            while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
            std::string lex = input.substr(start, pos - start);
            out.push_back({lex == "i" ? TokenKind::IMAG_UNIT : TokenKind::IDENT, lex, start});
            continue;
        }
        TokenKind k;
        switch (c) {
            case '/': k = TokenKind::SLASH; break;
            case '+': k = TokenKind::PLUS; break;
            case '-': k = TokenKind::MINUS; break;
            case '*': k = TokenKind::STAR; break;
            case '^': k = TokenKind::CARET; break;
            case '(': k = TokenKind::LPAREN; break;
            case ')': k = TokenKind::RPAREN; break;
            default:
                throw ParseError(pos, "a token", std::string("invalid character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), start});
        ++pos;
    }
    out.push_back({TokenKind::END, "", input.size()});
    return out;
}

namespace detail {

class ExprParser {
public:
    ExprParser(std::vector<ExprToken> tokens, std::vector<std::string> vars)
        : tokens_(std::move(tokens)), vars_(std::move(vars)) {}

    MultiPoly run() {
        MultiPoly p = expr();
        expect(TokenKind::END, "end of input");
        return p;
    }

private:
    static constexpr unsigned kExponentCap = 64;

    const ExprToken& peek() const { return tokens_[idx_]; }
    const ExprToken& advance() { return tokens_[idx_++]; }
    bool match(TokenKind k) {
        if (peek().kind == k) {
            ++idx_;
            return true;
        }
        return false;
    }
    const ExprToken& expect(TokenKind k, const std::string& what) {
        if (peek().kind != k) throw ParseError(peek().position, what, describe(peek()));
        return advance();
    }
    static std::string describe(const ExprToken& t) {
        if (t.kind == TokenKind::END) return "end of input";
        return "'" + t.lexeme + "'";
    }

    int nvars() const { return static_cast<int>(vars_.size()); }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (match(TokenKind::PLUS))
                acc += term();
            else if (match(TokenKind::MINUS))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (match(TokenKind::STAR)) acc *= factor();
        return acc;
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (match(TokenKind::CARET)) {
            const ExprToken& e = expect(TokenKind::INT, "an integer exponent");
            unsigned long v = 0;
            try {
                v = std::stoul(e.lexeme);
            } catch (const std::exception&) {
                throw ParseError(e.position, "an exponent <= 64", "'" + e.lexeme + "'");
            }
            if (v > kExponentCap) throw ParseError(e.position, "an exponent <= 64", "'" + e.lexeme + "'");
            return b.pow(static_cast<unsigned>(v));
        }
        return b;
    }

    MultiPoly base() {
        const ExprToken& t = peek();
        switch (t.kind) {
            case TokenKind::IDENT: {
                advance();
                for (std::size_t k = 0; k < vars_.size(); ++k)
                    if (vars_[k] == t.lexeme) return MultiPoly::variable(nvars(), static_cast<int>(k));
                throw ParseError(t.position, "a declared variable", "unknown identifier '" + t.lexeme + "'");
            }
            case TokenKind::INT: {
                advance();
                Rational num(t.lexeme);
                if (peek().kind == TokenKind::SLASH) {
                    advance();
                    const ExprToken& d = expect(TokenKind::INT, "a denominator");
                    Rational den(d.lexeme);
                    if (sgn(den) == 0) throw ParseError(d.position, "a nonzero denominator", "'0'");
                    num /= den;
                }
                num.canonicalize();
                return MultiPoly::constant(nvars(), GaussianRational(num));
            }
            case TokenKind::IMAG_UNIT:
                advance();
                return MultiPoly::constant(nvars(), GaussianRational::i());
            case TokenKind::LPAREN: {
                advance();
                MultiPoly inner = expr();
                expect(TokenKind::RPAREN, "')'");
                return inner;
            }
            case TokenKind::MINUS:
                advance();
                return -factor();
            default:
                throw ParseError(t.position, "a value", describe(t));
        }
    }

    std::vector<ExprToken> tokens_;
    std::vector<std::string> vars_;
    std::size_t idx_ = 0;
};

}  // namespace detail

/// Parses `input` over the declared variables (nonempty, distinct, each
/// matching [a-z][0-9]* and different from "i"). Throws ParseError.
inline MultiPoly parse(const std::string& input, const std::vector<std::string>& variables) {
    if (variables.empty()) throw std::invalid_argument("parse: variable list is empty");
    for (std::size_t a = 0; a < variables.size(); ++a) {
        const std::string& v = variables[a];
        if (v == "i") throw std::invalid_argument("parse: 'i' is reserved for the imaginary unit");
        if (v.empty() || v[0] < 'a' || v[0] > 'z')
            throw std::invalid_argument("parse: bad variable name '" + v + "'");
        for (std::size_t k = 1; k < v.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(v[k])))
                throw std::invalid_argument("parse: bad variable name '" + v + "'");
        for (std::size_t b = a + 1; b < variables.size(); ++b)
            if (variables[b] == v) throw std::invalid_argument("parse: duplicate variable '" + v + "'");
    }
    return detail::ExprParser(tokenize(input), variables).run();
}

/// Parses a constant Gaussian-rational expression such as "1+i" or "-3/2".
inline GaussianRational parse_constant(const std::string& input) {
    MultiPoly p = detail::ExprParser(tokenize(input), {}).run();
    if (p.is_zero()) return GaussianRational(0);
    if (!p.is_constant()) throw std::invalid_argument("parse_constant: not a constant expression");
    return p.terms().begin()->second;
}

}  // namespace polyfib
