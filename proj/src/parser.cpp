#include "deficitlab/parser.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace deficitlab {

namespace {

constexpr std::size_t kMaxNesting = 512;
constexpr unsigned long kMaxExponent = 4096;

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    mpz_class uint_literal() {
        if (!at_digit()) fail("expected an unsigned integer");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    struct DepthGuard {
        explicit DepthGuard(ExprParser& p) : parser(p) {
            if (++parser.depth_ > kMaxNesting) parser.fail("expression nested too deeply");
        }
        ~DepthGuard() { --parser.depth_; }
        ExprParser& parser;
    };

    Expr expr() {
        DepthGuard guard(*this);
        skip_ws();
        Expr sum;
        sum.kind = Expr::Kind::Sum;
        sum.position = pos_;
        sum.children.push_back(term());
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('+')) {
                sum.children.push_back(term());
            } else if (accept('-')) {
                Expr neg;
                neg.kind = Expr::Kind::Negate;
                neg.position = at;
                neg.children.push_back(term());
                sum.children.push_back(std::move(neg));
            } else {
                break;
            }
        }
        if (sum.children.size() == 1) return std::move(sum.children.front());
        return sum;
    }

    Expr term() {
        skip_ws();
        Expr product;
        product.kind = Expr::Kind::Product;
        product.position = pos_;
        product.children.push_back(factor());
        while (accept('*')) product.children.push_back(factor());
        if (product.children.size() == 1) return std::move(product.children.front());
        return product;
    }

    Expr factor() {
        skip_ws();
        const std::size_t at = pos_;
        Expr b = base();
        if (!accept('^')) return b;
        const mpz_class e = uint_literal();
        if (!e.fits_ulong_p()) throw Error(ErrorCode::DegreeOverflow, "exponent too large", at);
        Expr power;
        power.kind = Expr::Kind::Power;
        power.position = at;
        power.exponent = e.get_ui();
        power.children.push_back(std::move(b));
        return power;
    }

    Expr base() {
        DepthGuard guard(*this);
        skip_ws();
        Expr node;
        node.position = pos_;
        if (pos_ == text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            node.numerator = uint_literal();
            node.kind = Expr::Kind::Integer;
            if (accept('/')) {
                node.kind = Expr::Kind::Fraction;
                node.denominator = uint_literal();
            }
            return node;
        }
        if (accept('(')) {
            Expr inner = expr();
            expect(')');
            return inner;
        }
        if (accept('-')) {
            node.kind = Expr::Kind::Negate;
            node.children.push_back(base());
            return node;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view word = text_.substr(start, pos_ - start);
            if (word == "sqrt") {
                node.kind = Expr::Kind::Sqrt;
                expect('(');
                const bool negative = accept('-');
                const std::size_t arg_at = pos_;
                const mpz_class value = uint_literal();
                if (!value.fits_slong_p()) throw Error(ErrorCode::SyntaxError, "sqrt argument too large", arg_at);
                node.radicand = negative ? -value.get_si() : value.get_si();
                if (node.radicand == 0) throw Error(ErrorCode::SyntaxError, "sqrt argument must be nonzero", arg_at);
                expect(')');
                return node;
            }
            if (word.size() == 1 && std::string_view("itgxy").find(word[0]) != std::string_view::npos) {
                node.kind = Expr::Kind::Symbol;
                node.symbol = word[0];
                return node;
            }
            throw Error(ErrorCode::UnknownSymbol, "unknown symbol '" + std::string(word) + "'", start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

Poly2 power(const Poly2& base, unsigned long exponent, std::size_t at) {
    if (exponent > kMaxExponent) throw Error(ErrorCode::DegreeOverflow, "exponent too large", at);
    if (!base.is_zero() && composed_size(base.total_degree(), exponent) > kDefaultCoefficientCap)
        throw Error(ErrorCode::DegreeOverflow, "power exceeds the coefficient cap", at);
    Poly2 result = Poly2::constant(Element::one(base.context()));
    Poly2 square = base;
    while (exponent != 0) {
        if (exponent & 1UL) result *= square;
        exponent >>= 1UL;
        if (exponent != 0) square *= square;
    }
    return result;
}

Poly2 evaluate(const Expr& e, const ContextPtr& ctx, int arity) {
    switch (e.kind) {
        case Expr::Kind::Symbol:
            if (e.symbol == 'x' || e.symbol == 'y') {
                if (arity == 0)
                    throw Error(ErrorCode::UnknownSymbol, std::string("variable '") + e.symbol + "' in a constant",
                                e.position);
                if (e.symbol == 'y' && arity < 2)
                    throw Error(ErrorCode::ArityViolation, "variable 'y' in a univariate polynomial", e.position);
                return e.symbol == 'x' ? Poly2::variable_x(ctx) : Poly2::variable_y(ctx);
            }
            [[fallthrough]];
        case Expr::Kind::Integer:
        case Expr::Kind::Fraction:
        case Expr::Kind::Sqrt:
            try {
                return Poly2::constant(element_from_literal(ctx, e));
            } catch (const Error& err) {
                if (err.position()) throw;
                throw Error(err.code(), err.what(), e.position);
            }
        case Expr::Kind::Negate: return -evaluate(e.children.at(0), ctx, arity);
        case Expr::Kind::Sum: {
            Poly2 acc(ctx);
            for (const Expr& child : e.children) acc += evaluate(child, ctx, arity);
            return acc;
        }
        case Expr::Kind::Product: {
            Poly2 acc = Poly2::constant(Element::one(ctx));
            for (const Expr& child : e.children) {
                acc *= evaluate(child, ctx, arity);
                if (!acc.is_zero() && acc.total_degree() + 1 > kDefaultCoefficientCap)
                    throw Error(ErrorCode::DegreeOverflow, "product exceeds the coefficient cap", e.position);
            }
            return acc;
        }
        case Expr::Kind::Power: return power(evaluate(e.children.at(0), ctx, arity), e.exponent, e.position);
    }
    throw std::logic_error("unreachable");
}

std::string power_of(const char* name, std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return name;
    return std::string(name) + "^" + std::to_string(k);
}

std::string join_monomial(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

// Coefficient c times a variable monomial, as one printable term.
Term coefficient_term(const Element& c, const std::string& variables) {
    const std::vector<Term> parts = c.terms();
    if (parts.size() == 1) return {parts.front().coefficient, join_monomial(parts.front().monomial, variables)};
    return {mpq_class(1), join_monomial("(" + join_terms(parts) + ")", variables)};
}

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::variant<Poly1, Poly2> parse_poly(std::string_view text, const ContextPtr& ctx, int arity) {
    if (arity != 1 && arity != 2) throw std::invalid_argument("arity must be 1 or 2");
    Poly2 p = evaluate(parse_expr(text), ctx, arity);
    if (arity == 2) return p;
    return to_univariate(p);
}

Poly1 parse_poly1(std::string_view text, const ContextPtr& ctx) { return std::get<Poly1>(parse_poly(text, ctx, 1)); }

Poly2 parse_poly2(std::string_view text, const ContextPtr& ctx) { return std::get<Poly2>(parse_poly(text, ctx, 2)); }

Element parse_element(std::string_view text, const ContextPtr& ctx) {
    const Poly2 p = evaluate(parse_expr(text), ctx, 0);
    return p.coefficient(0, 0);
}

std::string format_poly(const Poly1& p) {
    std::vector<Term> terms;
    const auto& a = p.coefficients();
    for (std::size_t k = a.size(); k-- > 0;)
        if (!a[k].is_zero()) terms.push_back(coefficient_term(a[k], power_of("x", k)));
    return join_terms(terms);
}

std::string format_poly(const Poly2& p) {
    std::vector<Term> terms;
    const auto& parts = p.parts();
    for (std::size_t k = parts.size(); k-- > 0;)
        for (auto it = parts[k].rbegin(); it != parts[k].rend(); ++it)
            terms.push_back(
                coefficient_term(it->second, join_monomial(power_of("x", it->first), power_of("y", k - it->first))));
    return join_terms(terms);
}

}  // namespace deficitlab
