#include "bifib/grammar.hpp"

#include <cctype>
#include <sstream>

namespace bifib {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok { Int, Name, Imag, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_ = {Tok::Int, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            current_ = {name == "i" ? Tok::Imag : Tok::Name, std::move(name), start};
            return;
        }
        ++pos_;
        switch (c) {
            case '+': current_ = {Tok::Plus, "+", start}; return;
            case '-': current_ = {Tok::Minus, "-", start}; return;
            case '*': current_ = {Tok::Star, "*", start}; return;
            case '^': current_ = {Tok::Caret, "^", start}; return;
            case '(': current_ = {Tok::LParen, "(", start}; return;
            case ')': current_ = {Tok::RParen, ")", start}; return;
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{Tok::End, "", 0};
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    MultiPoly parse() {
        MultiPoly p = parse_term();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool negate = lex_.take().kind == Tok::Minus;
            MultiPoly t = parse_term();
            p += negate ? -t : t;
        }
        if (lex_.peek().kind != Tok::End)
            throw SyntaxError("trailing input after polynomial", lex_.peek().pos);
        return p;
    }

private:
    Int parse_int() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Tok::Int)
            throw SyntaxError("expected an integer", lex_.peek().pos);
        Int v(lex_.take().text);
        return neg ? -v : v;
    }

    GaussianInt parse_gaussian() {
        lex_.take();  // '('
        Int re = parse_int();
        Tok sign = lex_.peek().kind;
        if (sign != Tok::Plus && sign != Tok::Minus)
            throw SyntaxError("expected '+' or '-' inside Gaussian coefficient",
                              lex_.peek().pos);
        lex_.take();
        Int im = parse_int();
        if (sign == Tok::Minus) im = -im;
        if (lex_.peek().kind != Tok::Imag)
            throw SyntaxError("expected 'i' inside Gaussian coefficient", lex_.peek().pos);
        lex_.take();
        if (lex_.peek().kind != Tok::RParen)
            throw SyntaxError("expected ')' closing Gaussian coefficient", lex_.peek().pos);
        lex_.take();
        return GaussianInt(std::move(re), std::move(im));
    }

    // factor := var ('^' int)?
    void parse_factor(Exponents& e) {
        const Token& t = lex_.peek();
        if (t.kind != Tok::Name)
            throw SyntaxError("expected a variable", t.pos);
        auto v = var_from_name(t.text);
        if (!v) throw SyntaxError("unknown variable '" + t.text + "'", t.pos);
        lex_.take();
        std::int32_t exp = 1;
        if (lex_.peek().kind == Tok::Caret) {
            std::size_t pos = lex_.take().pos;
            Int raw = parse_int();
            if (raw < -1000000 || raw > 1000000)
                throw SyntaxError("exponent out of range", pos);
            exp = raw.convert_to<std::int32_t>();
        }
        e[*v] += exp;
    }

    MultiPoly parse_term() {
        GaussianInt coeff(1);
        Exponents e;
        const Token& t = lex_.peek();
        if (t.kind == Tok::Int || t.kind == Tok::Minus) {
            coeff = GaussianInt(parse_int());
        } else if (t.kind == Tok::LParen) {
            coeff = parse_gaussian();
        } else if (t.kind == Tok::Name) {
            parse_factor(e);
        } else {
            throw SyntaxError("expected a term", t.pos);
        }
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            parse_factor(e);
        }
        return MultiPoly::monomial(std::move(coeff), e);
    }

    Lexer lex_;
};

// ---------------------------------------------------------------------------
// Renderer
// ---------------------------------------------------------------------------

void render_factors(std::ostringstream& out, const Exponents& e, bool leading_star) {
    bool first = !leading_star;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (e.e[i] == 0) continue;
        if (!first) out << '*';
        first = false;
        out << var_name(static_cast<Var>(i));
        if (e.e[i] != 1) out << '^' << e.e[i];
    }
}

void render_gaussian(std::ostringstream& out, const GaussianInt& c) {
    Int im_abs = c.im < 0 ? Int(-c.im) : c.im;
    out << '(' << c.re.str() << (c.im < 0 ? '-' : '+') << im_abs.str() << "i)";
}

}  // namespace

MultiPoly parse_poly(std::string_view text) {
    Parser parser(text);
    return parser.parse();
}

std::string render_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool constant = e.is_constant();
        if (c.is_real()) {
            Int mag = c.re;
            if (first) {
                // The leading sign has no separator slot, so it stays inside
                // the coefficient literal ("-1*x", "-3").
                if (c.re < 0 && !constant) {
                    out << c.re.str();
                    render_factors(out, e, true);
                } else if (constant) {
                    out << c.re.str();
                } else if (c.re == 1) {
                    render_factors(out, e, false);
                } else {
                    out << c.re.str();
                    render_factors(out, e, true);
                }
            } else {
                out << (c.re < 0 ? " - " : " + ");
                if (c.re < 0) mag = -mag;
                if (constant) {
                    out << mag.str();
                } else if (mag == 1) {
                    render_factors(out, e, false);
                } else {
                    out << mag.str();
                    render_factors(out, e, true);
                }
            }
        } else {
            if (!first) out << " + ";
            render_gaussian(out, c);
            render_factors(out, e, true);
        }
        first = false;
    }
    return out.str();
}

Rat parse_rational(std::string_view text) {
    if (text.empty()) throw SyntaxError("empty rational literal", 0);
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(Int(std::string(text)));
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den.is_zero()) throw DivisionByZero("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rat(num, den);
    } catch (const DivisionByZero&) {
        throw;
    } catch (const std::exception&) {
        throw SyntaxError("malformed rational literal '" + std::string(text) + "'", 0);
    }
}

std::string render_rational(const Rat& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string render_value(const GaussianRational& v) {
    if (v.is_real()) return render_rational(v.re);
    Rat im_abs = v.im < 0 ? Rat(-v.im) : v.im;
    return "(" + render_rational(v.re) + (v.im < 0 ? "-" : "+") + render_rational(im_abs) + "i)";
}

}  // namespace bifib
