#include "weylan/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace weylan {

namespace {

enum class Tok { Int, Var, DVar, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    Integer int_value;
    int var_index = 0; // for Var/DVar
    int column = 1;    // 1-based
};

class Lexer {
public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    int line() const { return line_; }

private:
    void advance() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
        tok_.column = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.kind = Tok::Int;
            tok_.int_value = Integer(text_.substr(start, pos_ - start));
            return;
        }
        if (c == 'x' || c == 'd') {
            size_t start = pos_ + 1;
            size_t end = start;
            while (end < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[end])))
                ++end;
            if (end == start)
                throw parse_error(std::string("expected variable index after '") + c + "'",
                                  line_, tok_.column);
            tok_.kind = (c == 'x') ? Tok::Var : Tok::DVar;
            tok_.var_index = std::stoi(text_.substr(start, end - start));
            pos_ = end;
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_.kind = Tok::Plus; return;
            case '-': tok_.kind = Tok::Minus; return;
            case '*': tok_.kind = Tok::Star; return;
            case '^': tok_.kind = Tok::Caret; return;
            case '/': tok_.kind = Tok::Slash; return;
            case '(': tok_.kind = Tok::LParen; return;
            case ')': tok_.kind = Tok::RParen; return;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'",
                                  line_, tok_.column);
        }
    }

    const std::string& text_;
    int line_;
    size_t pos_ = 0;
    Token tok_;
};

/// Recursive-descent evaluator shared by the Poly and WeylElement grammars.
/// V needs: constant, variable, d-variable (optional), +, -, unary -, *, pow.
template <class V>
struct Ops;

template <>
struct Ops<Poly> {
    static Poly constant(int n, const Rational& c) { return Poly::constant(n, c); }
    static Poly variable(int n, int i) { return Poly::variable(n, i); }
    static Poly dvariable(int, int, int line, int col) {
        throw parse_error("d-symbols are not allowed in a polynomial", line, col);
    }
    static Poly mul(const Poly& a, const Poly& b) { return a * b; }
};

template <>
struct Ops<WeylElement> {
    static WeylElement constant(int n, const Rational& c) {
        return WeylElement::constant(n, c);
    }
    static WeylElement variable(int n, int i) { return WeylElement::x(n, i); }
    static WeylElement dvariable(int n, int i, int, int) { return WeylElement::d(n, i); }
    static WeylElement mul(const WeylElement& a, const WeylElement& b) {
        return weyl_mul(a, b);
    }
};

template <class V>
class Parser {
public:
    Parser(const std::string& text, int nvars, int line)
        : lex_(text, line), nvars_(nvars) {}

    V parse() {
        V v = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw parse_error("unexpected trailing input", lex_.line(), t.column);
        return v;
    }

private:
    V expr() {
        V v = term();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                v += term();
            } else if (k == Tok::Minus) {
                lex_.take();
                v -= term();
            } else {
                return v;
            }
        }
    }

    V term() {
        V v = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            v = Ops<V>::mul(v, factor());
        }
        return v;
    }

    V factor() {
        int sign = 1;
        while (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) {
            if (lex_.take().kind == Tok::Minus) sign = -sign;
        }
        V v = power();
        return sign < 0 ? -v : v;
    }

    V power() {
        V base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.take();
            Token e = lex_.peek();
            if (e.kind != Tok::Int)
                throw parse_error("expected non-negative integer exponent",
                                  lex_.line(), e.column);
            lex_.take();
            if (!e.int_value.fits_slong_p())
                throw parse_error("exponent too large", lex_.line(), e.column);
            base = base.pow(e.int_value.get_si());
            if (lex_.peek().kind == Tok::Caret)
                throw parse_error("chained '^' requires parentheses", lex_.line(),
                                  lex_.peek().column);
            (void)caret;
        }
        return base;
    }

    V atom() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Int: {
                lex_.take();
                Integer num = t.int_value;
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    Token den = lex_.peek();
                    if (den.kind != Tok::Int)
                        throw parse_error("expected integer denominator", lex_.line(),
                                          den.column);
                    lex_.take();
                    if (den.int_value == 0)
                        throw parse_error("zero denominator", lex_.line(), den.column);
                    return Ops<V>::constant(nvars_, Rational(num, den.int_value));
                }
                return Ops<V>::constant(nvars_, Rational(num));
            }
            case Tok::Var:
            case Tok::DVar: {
                lex_.take();
                if (t.var_index < 1 || t.var_index > nvars_)
                    throw parse_error("variable index out of range 1.." +
                                          std::to_string(nvars_),
                                      lex_.line(), t.column);
                if (t.kind == Tok::Var) return Ops<V>::variable(nvars_, t.var_index);
                return Ops<V>::dvariable(nvars_, t.var_index, lex_.line(), t.column);
            }
            case Tok::LParen: {
                lex_.take();
                V v = expr();
                if (lex_.peek().kind != Tok::RParen)
                    throw parse_error("expected ')'", lex_.line(), lex_.peek().column);
                lex_.take();
                return v;
            }
            case Tok::Slash:
                throw parse_error("'/' is only valid inside a rational literal",
                                  lex_.line(), t.column);
            default:
                throw parse_error("expected a number, variable, or '('", lex_.line(),
                                  t.column);
        }
    }

    Lexer lex_;
    int nvars_;
};

} // namespace

Poly parse_poly(const std::string& text, int nvars, int line1) {
    return Parser<Poly>(text, nvars, line1).parse();
}

WeylElement parse_weyl(const std::string& text, int nvars, int line1) {
    return Parser<WeylElement>(text, nvars, line1).parse();
}

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

EndoFile parse_endo_file(std::istream& in) {
    EndoFile out;
    std::string line;
    int lineno = 0;
    int header_line = 0;

    // header: "n = <int>" or "poisson n = <int>"
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::istringstream hs(line);
        std::string w1;
        hs >> w1;
        if (w1 == "poisson") {
            out.poisson = true;
            hs >> w1;
        }
        std::string eq;
        int n = 0;
        if (w1 != "n" || !(hs >> eq) || eq != "=" || !(hs >> n))
            throw parse_error("expected header 'n = <int>' or 'poisson n = <int>'",
                              lineno, 1);
        std::string rest;
        if (hs >> rest)
            throw parse_error("unexpected trailing input after header", lineno, 1);
        if (n < 1) throw parse_error("n must be positive", lineno, 1);
        out.n = n;
        header_line = lineno;
        break;
    }
    if (header_line == 0) throw parse_error("missing header line", lineno + 1, 1);

    int vars = out.ambient_vars();
    int expected = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        if (expected > vars)
            throw parse_error("unexpected extra image line", lineno, 1);
        size_t arrow = line.find("->");
        if (arrow == std::string::npos)
            throw parse_error("expected 'x" + std::to_string(expected) + " -> <polynomial>'",
                              lineno, 1);
        std::string lhs = line.substr(0, arrow);
        std::istringstream ls(lhs);
        std::string name;
        ls >> name;
        std::string extra;
        if (ls >> extra)
            throw parse_error("malformed left-hand side before '->'", lineno, 1);
        if (name != "x" + std::to_string(expected))
            throw parse_error("expected image of x" + std::to_string(expected) +
                                  " (images must appear in ascending order)",
                              lineno, 1);
        std::string rhs = line.substr(arrow + 2);
        try {
            out.images.push_back(parse_poly(rhs, vars, lineno));
        } catch (const parse_error& e) {
            // re-anchor the column to the full line
            throw parse_error(std::string(e.what()).substr(
                                  0, std::string(e.what()).find(" at line")),
                              e.line, e.column + static_cast<int>(arrow) + 2);
        }
        ++expected;
    }
    if (expected <= vars)
        throw parse_error("missing image of x" + std::to_string(expected), lineno + 1, 1);
    return out;
}

EndoFile parse_endo_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_endo_file(ss);
}

EndoFile load_endo_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    return parse_endo_file(in);
}

} // namespace weylan
