#include "valdim/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace valdim {

namespace {

enum class Tok { End, Ident, Number, Plus, Minus, Star, Caret, LParen, RParen };

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    Tok tok = Tok::End;
    std::string ident;
    Rat number;

    explicit Lexer(const std::string& t) : text(t) { advance(); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    void advance() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string num = text.substr(start, pos - start);
            std::string den = "1";
            if (pos < text.size() && text[pos] == '/') {
                size_t dstart = pos + 1;
                if (dstart >= text.size() ||
                    !std::isdigit(static_cast<unsigned char>(text[dstart])))
                    fail("expected digits after '/' in numeric literal");
                pos = dstart;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                den = text.substr(dstart, pos - dstart);
            }
            number = Rat(mpz_class(num), mpz_class(den));
            number.canonicalize();
            tok = Tok::Number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_'))
                ++pos;
            ident = text.substr(start, pos - start);
            tok = Tok::Ident;
            return;
        }
        ++pos;
        switch (c) {
            case '+': tok = Tok::Plus; return;
            case '-': tok = Tok::Minus; return;
            case '*': tok = Tok::Star; return;
            case '^': tok = Tok::Caret; return;
            case '(': tok = Tok::LParen; return;
            case ')': tok = Tok::RParen; return;
            case '/': fail("'/' is only permitted inside numeric literals");
            default: fail(std::string("unexpected character '") + c + "'");
        }
    }
};

struct Parser {
    Lexer lex;
    const Field& field;
    const std::vector<std::string>& vars;
    bool laurent;

    Parser(const std::string& text, const Field& f, const std::vector<std::string>& v, bool l)
        : lex(text), field(f), vars(v), laurent(l) {}

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        lex.fail("unknown variable '" + name + "'");
    }

    long parse_exponent() {
        bool negative = false;
        if (lex.tok == Tok::Minus) {
            negative = true;
            lex.advance();
        }
        if (lex.tok != Tok::Number || lex.number.get_den() != 1)
            lex.fail("expected integer exponent after '^'");
        long e = lex.number.get_num().get_si();
        lex.advance();
        if (negative) e = -e;
        if (negative && !laurent) lex.fail("negative exponents require a Laurent context");
        return e;
    }

    Poly parse_factor() {
        if (lex.tok == Tok::Minus) {
            lex.advance();
            return neg(parse_factor());
        }
        Poly base = Poly::zero(field, static_cast<int>(vars.size()), laurent);
        if (lex.tok == Tok::Number) {
            base = Poly::constant(field, base.nvars, lex.number, laurent);
            lex.advance();
        } else if (lex.tok == Tok::Ident) {
            base = Poly::variable(field, base.nvars, var_index(lex.ident), laurent);
            lex.advance();
        } else if (lex.tok == Tok::LParen) {
            lex.advance();
            base = parse_expr();
            if (lex.tok != Tok::RParen) lex.fail("expected ')'");
            lex.advance();
        } else {
            lex.fail("expected number, variable, or '('");
        }
        if (lex.tok == Tok::Caret) {
            lex.advance();
            long e = parse_exponent();
            if (e >= 0) return pow(base, e);
            if (base.terms.size() != 1)
                lex.fail("negative exponents apply only to single monomials");
            const auto& [ev, c] = *base.terms.begin();
            ExpVec ne(ev.size());
            for (size_t i = 0; i < ev.size(); ++i) ne[i] = ev[i] * static_cast<int>(e);
            Rat inv = field.inv(c);
            Rat coeff(1);
            for (long i = 0; i < -e; ++i) coeff = field.mul(coeff, inv);
            return Poly::monomial(field, base.nvars, ne, coeff, true);
        }
        return base;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (lex.tok == Tok::Star) {
            lex.advance();
            p = mul(p, parse_factor());
        }
        return p;
    }

    Poly parse_expr() {
        Poly p = parse_term();
        while (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
            bool plus = lex.tok == Tok::Plus;
            lex.advance();
            Poly q = parse_term();
            p = plus ? add(p, q) : sub(p, q);
        }
        return p;
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const Field& field, const std::vector<std::string>& vars,
                bool laurent) {
    Parser parser(text, field, vars, laurent);
    Poly p = parser.parse_expr();
    if (parser.lex.tok != Tok::End) parser.lex.fail("unexpected trailing input");
    return p;
}

}  // namespace valdim
