#include "abel/parse.hpp"

#include <cctype>
#include <sstream>

namespace abel {

namespace {

enum class Tok { Number, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    Int value; // Number only
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) {
            bump();
        }
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= s_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = s_[pos_];
        switch (c) {
        case '+': cur_.kind = Tok::Plus; bump(); return;
        case '-': cur_.kind = Tok::Minus; bump(); return;
        case '*': cur_.kind = Tok::Star; bump(); return;
        case '^': cur_.kind = Tok::Caret; bump(); return;
        case '/': cur_.kind = Tok::Slash; bump(); return;
        case '(': cur_.kind = Tok::LParen; bump(); return;
        case ')': cur_.kind = Tok::RParen; bump(); return;
        case 't': cur_.kind = Tok::Var; bump(); return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                digits.push_back(s_[pos_]);
                bump();
            }
            cur_.kind = Tok::Number;
            cur_.value = Int(digits);
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_{};
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lx_(text) {}

    Poly parse() {
        Poly p = expr();
        const Token& t = lx_.peek();
        if (t.kind != Tok::End) throw parse_error("expected end of input", t.line, t.col);
        return p;
    }

  private:
    [[noreturn]] static void expected(const char* what, const Token& t) {
        throw parse_error(std::string("expected ") + what, t.line, t.col);
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            Tok k = lx_.peek().kind;
            if (k == Tok::Plus) {
                lx_.take();
                acc = acc + term();
            } else if (k == Tok::Minus) {
                lx_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            Tok k = lx_.peek().kind;
            if (k == Tok::Star) {
                lx_.take();
                acc = acc * factor();
            } else if (k == Tok::Var || k == Tok::LParen) {
                // implicit adjacency: ...)(...  or  2t  or  )t
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        const Token& t = lx_.peek();
        if (t.kind == Tok::Minus) {
            lx_.take();
            return -factor(); // '^' binds tighter; handled inside
        }
        Poly b = base();
        if (lx_.peek().kind == Tok::Caret) {
            Token caret = lx_.take();
            const Token& e = lx_.peek();
            if (e.kind == Tok::Minus || e.kind == Tok::LParen)
                throw parse_error("exponent must be a nonnegative integer", e.line, e.col);
            if (e.kind != Tok::Number) expected("integer exponent after '^'", e);
            Token num = lx_.take();
            if (!num.value.fits_uint_p())
                throw parse_error("exponent too large", num.line, num.col);
            (void)caret;
            return b.pow(num.value.get_ui());
        }
        return b;
    }

    Poly base() {
        Token t = lx_.take();
        switch (t.kind) {
        case Tok::Number: {
            if (lx_.peek().kind == Tok::Slash) {
                // rational literal a/b, but only when followed by a digit
                lx_.take();
                const Token& d = lx_.peek();
                if (d.kind != Tok::Number) expected("integer after '/'", d);
                Token den = lx_.take();
                if (sgn(den.value) == 0) throw parse_error("zero denominator", den.line, den.col);
                return Poly::constant(Rational(t.value, den.value));
            }
            return Poly::constant(Rational(t.value));
        }
        case Tok::Var:
            return Poly::variable();
        case Tok::LParen: {
            Poly inner = expr();
            const Token& r = lx_.peek();
            if (r.kind != Tok::RParen) expected("')'", r);
            lx_.take();
            return inner;
        }
        default:
            expected("number, 't', or '('", t);
        }
    }

    Lexer lx_;
};

} // namespace

Poly parse_poly(const std::string& text) { return Parser(text).parse(); }

std::string format_poly(const Poly& p) { return format_poly(p, "t"); }

std::string format_poly(const Poly& p, const std::string& var)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i--;) {
        const Rational& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string mag = c.abs().to_string();
        if (i == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string format_qpoly(const QPoly& p)
{
    auto rat = to_rational_poly(p);
    if (rat) return format_poly(*rat);
    std::vector<Rational> a, b;
    Int d = 1;
    for (const auto& c : p.coeffs()) {
        a.push_back(c.rational_part());
        b.push_back(c.radical_part());
        if (!c.is_rational()) d = c.radicand();
    }
    Poly pa((std::vector<Rational>(a)));
    Poly pb((std::vector<Rational>(b)));
    std::string out;
    if (!pa.is_zero()) out += "(" + format_poly(pa) + ") + ";
    return out + "sqrt(" + d.get_str() + ")*(" + format_poly(pb) + ")";
}

} // namespace abel
