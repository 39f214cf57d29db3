#include "logchern/parser.hpp"

#include <algorithm>
#include <cctype>

#include "logchern/errors.hpp"

namespace logchern {

namespace {

constexpr unsigned kMaxExponent = 512;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
        }
        out.push_back({kind, std::string(1, s[i]), i});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars)
        : tokens_(tokenize(text)), vars_(vars) {}

    MultiPoly parse() {
        if (peek().kind == Tok::End) throw ParseError("empty polynomial", peek().pos);
        MultiPoly p = expr();
        if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return p;
    }

private:
    const Token& peek() const { return tokens_[i_]; }
    const Token& next() { return tokens_[i_++]; }

    MultiPoly expr() {
        MultiPoly acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = next().kind == Tok::Minus;
            MultiPoly rhs = term();
            if (minus) acc -= rhs;
            else acc += rhs;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            const Tok k = peek().kind;
            if (k == Tok::Star) {
                next();
                acc = acc * factor();
            } else if (k == Tok::Ident || k == Tok::LParen) {
                acc = acc * factor();
            } else if (k == Tok::Slash) {
                throw ParseError("division is only allowed inside a rational coefficient",
                                 peek().pos);
            } else {
                return acc;
            }
        }
    }

    MultiPoly factor() {
        if (peek().kind == Tok::Minus) {
            next();
            return -factor();
        }
        if (peek().kind == Tok::Plus) {
            next();
            return factor();
        }
        MultiPoly base = primary();
        if (peek().kind == Tok::Caret) {
            next();
            const Token& e = next();
            if (e.kind != Tok::Number) throw ParseError("exponent must be a non-negative integer", e.pos);
            if (e.text.size() > 4 || std::stoul(e.text) > kMaxExponent)
                throw ParseError("exponent too large", e.pos);
            base = pow(base, static_cast<unsigned>(std::stoul(e.text)));
            if (peek().kind == Tok::Caret) throw ParseError("chained exponent", peek().pos);
        }
        return base;
    }

    MultiPoly primary() {
        const Token& t = next();
        const std::size_t n = vars_.size();
        switch (t.kind) {
            case Tok::Number: {
                mpz_class num(t.text, 10);
                mpz_class den(1);
                if (peek().kind == Tok::Slash) {
                    next();
                    const Token& d = next();
                    if (d.kind != Tok::Number) throw ParseError("expected denominator", d.pos);
                    den = mpz_class(d.text, 10);
                    if (den == 0) throw ParseError("zero denominator", d.pos);
                }
                return MultiPoly::constant(n, Rat(num, den));
            }
            case Tok::Ident: {
                const auto it = std::find(vars_.begin(), vars_.end(), t.text);
                if (it == vars_.end()) throw ParseError("unknown variable '" + t.text + "'", t.pos);
                return MultiPoly::variable(n, static_cast<std::size_t>(it - vars_.begin()));
            }
            case Tok::LParen: {
                MultiPoly inner = expr();
                const Token& close = next();
                if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
                return inner;
            }
            case Tok::End:
                throw ParseError("unexpected end of input", t.pos);
            default:
                throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> tokens_;
    const std::vector<std::string>& vars_;
    std::size_t i_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

const std::vector<std::string>& xyz_vars() {
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}

const std::vector<std::string>& xy_vars() {
    static const std::vector<std::string> v{"x", "y"};
    return v;
}

}  // namespace logchern
