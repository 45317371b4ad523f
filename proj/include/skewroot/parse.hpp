#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "skew_poly.hpp"

namespace skewroot {

// ---------------------------------------------------------------------------
// Printing. Output uses exactly the grammar the parser accepts, so
// parse(to_string(v)) == v for every element and polynomial.
// ---------------------------------------------------------------------------

namespace detail {

inline const std::vector<std::string>& basis_monomials(const AlgebraDescriptor& alg) {
    static const std::vector<std::string> quat{"", "i", "j", "k"};
    static const std::vector<std::string> cyclic{"",    "th",      "th^2",
                                                 "u",   "th*u",    "th^2*u",
                                                 "u^2", "th*u^2",  "th^2*u^2"};
    return alg.kind() == AlgebraKind::Quaternion ? quat : cyclic;
}

struct Term {
    int sign;
    std::string body;
};

inline std::string join_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (out.empty())
            out = (t.sign < 0 ? "-" : "") + t.body;
        else
            out += (t.sign < 0 ? " - " : " + ") + t.body;
    }
    return out;
}

}  // namespace detail

/// Human-readable basis labels, index-aligned with AlgebraElement::coords().
inline std::vector<std::string> basis_names(const AlgebraDescriptor& alg) {
    auto names = detail::basis_monomials(alg);
    names[0] = "1";
    return names;
}

inline std::string to_string(const AlgebraElement& e) {
    const auto& monos = detail::basis_monomials(*e.algebra());
    std::vector<detail::Term> terms;
    for (std::size_t k = 0; k < e.coords().size(); ++k) {
        const auto& c = e.coords()[k];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        std::string body;
        if (monos[k].empty())
            body = mag.to_string();
        else
            body = (mag.is_one() ? "" : mag.to_string()) + monos[k];
        terms.push_back({c.sign(), std::move(body)});
    }
    return detail::join_terms(terms);
}

inline std::string to_string(const SkewPolynomial& p) {
    if (p.is_zero()) return "0";
    const auto& monos = detail::basis_monomials(*p.algebra());
    std::vector<detail::Term> terms;
    for (std::size_t k = p.degree() + 1; k-- > 0;) {
        const auto e = p.coeff(k);
        if (e.is_zero()) continue;
        const std::string xpart =
            k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        std::size_t nonzero = 0, idx = 0;
        for (std::size_t t = 0; t < e.coords().size(); ++t)
            if (!e.coords()[t].is_zero()) ++nonzero, idx = t;
        if (nonzero == 1) {
            const Rational mag = e.coords()[idx].abs();
            std::string body;
            if (monos[idx].empty()) {
                body = (mag.is_one() && k > 0 ? "" : mag.to_string()) + xpart;
            } else {
                body = (mag.is_one() ? "" : mag.to_string()) + monos[idx];
                if (!xpart.empty()) body += "*" + xpart;
            }
            terms.push_back({e.coords()[idx].sign(), std::move(body)});
        } else {
            std::string body = "(" + to_string(e) + ")";
            if (!xpart.empty()) body += "*" + xpart;
            terms.push_back({1, std::move(body)});
        }
    }
    return detail::join_terms(terms);
}

// ---------------------------------------------------------------------------
// Parsing. One grammar serves elements and polynomials:
//   expr   := term (('+' | '-') term)*
//   term   := signed (('*' signed) | signed-juxtaposed)*
//   signed := ('-' | '+')* power
//   power  := atom ('^' integer)?
//   atom   := rational | generator | variable | 'inv' '(' expr ')' | '(' expr ')'
// Rationals are written p or p/q with no spaces. Juxtaposition (as in "3i"
// or "2(1+i)") multiplies. Division exists only through inv(...). Writing a
// non-central coefficient to the right of x is rejected, never reordered.
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            // a '/' directly followed by digits is part of the rational literal
            if (i + 1 < src.size() && src[i] == '/' &&
                std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
                ++i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            }
            out.push_back({Token::Kind::Number, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Kind::Ident, std::string(src.substr(start, i - start)), start});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '^': kind = Token::Kind::Caret; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            case '/':
                raise(Errc::SyntaxError, "division is only available through inv(...)", start);
            default:
                raise(Errc::SyntaxError, std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Token::Kind::End, "", src.size()});
    return out;
}

class ExprParser {
public:
    ExprParser(std::string_view src, AlgebraPtr alg, std::string variable, bool allow_variable,
               bool allow_generators)
        : tokens_(tokenize(src)),
          alg_(std::move(alg)),
          variable_(std::move(variable)),
          allow_variable_(allow_variable),
          allow_generators_(allow_generators) {}

    SkewPolynomial parse() {
        auto value = parse_expr();
        if (peek().kind != Token::Kind::End)
            raise(Errc::SyntaxError, "unexpected trailing input", peek().pos);
        return value;
    }

private:
    const Token& peek() const { return tokens_[next_]; }
    Token take() { return tokens_[next_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++next_;
        return true;
    }

    SkewPolynomial parse_expr() {
        auto value = parse_term();
        for (;;) {
            if (accept(Token::Kind::Plus))
                value = value + parse_term();
            else if (accept(Token::Kind::Minus))
                value = value - parse_term();
            else
                return value;
        }
    }

    SkewPolynomial parse_term() {
        auto value = parse_signed();
        for (;;) {
            if (peek().kind == Token::Kind::Star) {
                const auto op = take();
                value = multiply_checked(value, parse_signed(), op.pos);
            } else if (peek().kind == Token::Kind::Ident ||
                       peek().kind == Token::Kind::LParen) {
                const std::size_t pos = peek().pos;  // juxtaposition
                value = multiply_checked(value, parse_power(), pos);
            } else {
                return value;
            }
        }
    }

    SkewPolynomial parse_signed() {
        bool negate = false;
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus)
            negate ^= (take().kind == Token::Kind::Minus);
        auto value = parse_power();
        return negate ? -value : value;
    }

    SkewPolynomial parse_power() {
        auto base = parse_atom();
        if (!accept(Token::Kind::Caret)) return base;
        const auto exp_tok = peek();
        if (exp_tok.kind != Token::Kind::Number ||
            exp_tok.text.find('/') != std::string::npos)
            raise(Errc::SyntaxError, "exponent must be a nonnegative integer", exp_tok.pos);
        take();
        const long exp = std::stol(exp_tok.text);
        auto acc = SkewPolynomial::one(alg_);
        for (long k = 0; k < exp; ++k) acc = acc * base;
        return acc;
    }

    SkewPolynomial parse_atom() {
        const auto tok = peek();
        switch (tok.kind) {
            case Token::Kind::Number:
                take();
                return SkewPolynomial::constant(
                    AlgebraElement::scalar(alg_, Rational::parse(tok.text)));
            case Token::Kind::LParen: {
                take();
                auto value = parse_expr();
                if (!accept(Token::Kind::RParen))
                    raise(Errc::SyntaxError, "expected ')'", peek().pos);
                return value;
            }
            case Token::Kind::Ident:
                take();
                return resolve_ident(tok);
            default:
                raise(Errc::SyntaxError, "expected a value", tok.pos);
        }
    }

    SkewPolynomial resolve_ident(const Token& tok) {
        const std::string& name = tok.text;
        if (name == "inv") {
            if (!accept(Token::Kind::LParen))
                raise(Errc::SyntaxError, "expected '(' after inv", peek().pos);
            auto inner = parse_expr();
            if (!accept(Token::Kind::RParen))
                raise(Errc::SyntaxError, "expected ')'", peek().pos);
            if (!inner.is_zero() && inner.degree() > 0)
                raise(Errc::SyntaxError, "inv(...) applies to elements, not polynomials",
                      tok.pos);
            return SkewPolynomial::constant(inner.coeff(0).inverse());
        }
        if (name == variable_) {
            if (!allow_variable_)
                raise(Errc::SyntaxError,
                      "variable '" + name + "' is not allowed in an element", tok.pos);
            return SkewPolynomial::variable(alg_);
        }
        if (allow_generators_) {
            const bool quat = alg_->kind() == AlgebraKind::Quaternion;
            if (name == "i" || name == "j" || name == "k") {
                if (!quat)
                    raise(Errc::MixedAlgebras,
                          "generator '" + name + "' belongs to a quaternion algebra", tok.pos);
                if (name == "i") return SkewPolynomial::constant(AlgebraElement::gen_i(alg_));
                if (name == "j") return SkewPolynomial::constant(AlgebraElement::gen_j(alg_));
                return SkewPolynomial::constant(AlgebraElement::gen_k(alg_));
            }
            if (name == "th" || name == "u") {
                if (quat)
                    raise(Errc::MixedAlgebras,
                          "generator '" + name + "' belongs to the cyclic algebra", tok.pos);
                return SkewPolynomial::constant(name == "th" ? AlgebraElement::gen_theta(alg_)
                                                             : AlgebraElement::gen_u(alg_));
            }
        }
        raise(Errc::SyntaxError, "unknown symbol '" + name + "'", tok.pos);
    }

    SkewPolynomial multiply_checked(const SkewPolynomial& lhs, const SkewPolynomial& rhs,
                                    std::size_t op_pos) {
        if (!lhs.is_zero() && lhs.degree() > 0 && (rhs.is_zero() || rhs.degree() == 0) &&
            !rhs.coeff(0).is_central())
            raise(Errc::NoncommutativeAmbiguity,
                  "coefficient written to the right of x; put coefficients on the left",
                  op_pos);
        return lhs * rhs;
    }

    std::vector<Token> tokens_;
    std::size_t next_ = 0;
    AlgebraPtr alg_;
    std::string variable_;
    bool allow_variable_;
    bool allow_generators_;
};

}  // namespace detail

inline AlgebraElement parse_element(std::string_view src, const AlgebraPtr& alg) {
    auto p = detail::ExprParser(src, alg, "x", false, true).parse();
    return p.coeff(0);
}

inline SkewPolynomial parse_poly(std::string_view src, const AlgebraPtr& alg) {
    return detail::ExprParser(src, alg, "x", true, true).parse();
}

/// Polynomial with rational coefficients in the given variable name,
/// low-to-high. Used for the cyclic algebra parameters g (variable t)
/// and sigma (variable th).
inline std::vector<Rational> parse_rational_poly(std::string_view src,
                                                 const std::string& variable) {
    static const AlgebraPtr host = AlgebraDescriptor::quaternion(Rational(-1), Rational(-1));
    auto p = detail::ExprParser(src, host, variable, true, false).parse();
    std::vector<Rational> out;
    if (p.is_zero()) return out;
    for (std::size_t k = 0; k <= p.degree(); ++k) {
        const auto c = p.coeff(k).central_value();
        if (!c)
            raise(Errc::SyntaxError, "polynomial must have rational coefficients");
        out.push_back(*c);
    }
    return out;
}

/// Algebra specs: "quat:A,B" with nonzero rationals A and B,
/// "cyclic:default", or "cyclic:g=<poly in t>;sigma=<poly in th>;gamma=<rational>"
/// where omitted keys fall back to the defaults.
inline AlgebraPtr parse_algebra(std::string_view spec) {
    const auto colon = spec.find(':');
    const auto head = spec.substr(0, colon == std::string_view::npos ? spec.size() : colon);
    const auto rest = colon == std::string_view::npos ? std::string_view{}
                                                      : spec.substr(colon + 1);
    if (head == "quat") {
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos)
            raise(Errc::SyntaxError, "expected quat:A,B");
        return AlgebraDescriptor::quaternion(Rational::parse(rest.substr(0, comma)),
                                             Rational::parse(rest.substr(comma + 1)));
    }
    if (head == "cyclic") {
        if (rest == "default" || rest.empty()) return AlgebraDescriptor::cyclic_default();
        std::vector<Rational> g{Rational(1), Rational(-3), Rational(0), Rational(1)};
        std::vector<Rational> sigma{Rational(-2), Rational(0), Rational(1)};
        Rational gamma(2);
        std::string_view tail = rest;
        while (!tail.empty()) {
            const auto semi = tail.find(';');
            const auto part = tail.substr(0, semi);
            tail = semi == std::string_view::npos ? std::string_view{} : tail.substr(semi + 1);
            const auto eq = part.find('=');
            if (eq == std::string_view::npos)
                raise(Errc::SyntaxError, "expected key=value in cyclic spec");
            const auto key = part.substr(0, eq);
            const auto value = part.substr(eq + 1);
            if (key == "g")
                g = parse_rational_poly(value, "t");
            else if (key == "sigma")
                sigma = parse_rational_poly(value, "th");
            else if (key == "gamma")
                gamma = Rational::parse(value);
            else
                raise(Errc::SyntaxError, "unknown cyclic key '" + std::string(key) + "'");
        }
        return AlgebraDescriptor::cyclic_cubic(g, sigma, gamma);
    }
    raise(Errc::SyntaxError, "unknown algebra spec '" + std::string(spec) + "'");
}

/// Canonical spec string for a descriptor, parseable by parse_algebra.
inline std::string to_spec_string(const AlgebraDescriptor& alg) {
    if (alg.kind() == AlgebraKind::Quaternion)
        return "quat:" + alg.quat_a().to_string() + "," + alg.quat_b().to_string();
    if (alg == *AlgebraDescriptor::cyclic_default()) return "cyclic:default";
    const CentralPolynomial g(
        {alg.cubic_modulus()[0], alg.cubic_modulus()[1], alg.cubic_modulus()[2],
         alg.cubic_modulus()[3]});
    std::vector<Rational> s(alg.sigma_theta().begin(), alg.sigma_theta().end());
    while (s.size() > 1 && s.back().is_zero()) s.pop_back();
    std::string sigma_text;
    for (std::size_t k = s.size(); k-- > 0;) {
        std::string piece = s[k].abs().to_string();
        if (k == 1) piece = (s[k].abs().is_one() ? "" : piece) + "th";
        if (k == 2) piece = (s[k].abs().is_one() ? "" : piece) + "th^2";
        if (s[k].is_zero()) continue;
        if (sigma_text.empty())
            sigma_text = (s[k].sign() < 0 ? "-" : "") + piece;
        else
            sigma_text += (s[k].sign() < 0 ? " - " : " + ") + piece;
    }
    if (sigma_text.empty()) sigma_text = "0";
    return "cyclic:g=" + g.to_string("t") + ";sigma=" + sigma_text +
           ";gamma=" + alg.gamma().to_string();
}

}  // namespace skewroot
