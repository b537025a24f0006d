#pragma once

// Polynomial text form.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := uint | uint '/' uint | 'sqrt' '(' int ')' | 'i' | 't' | 'g' | 'x' | 'y'
//           | '(' expr ')' | '-' base
//
// Multiplication is always explicit. Note that '-' binds tighter than '^', so "-x^2"
// reads as (-x)^2; the formatter never emits that shape.

#include <string>
#include <string_view>
#include <variant>

#include "deficitlab/expr.hpp"
#include "deficitlab/poly2.hpp"

namespace deficitlab {

/// Syntax only. Throws SyntaxError (with offset) or UnknownSymbol for identifiers
/// outside {sqrt, i, t, g, x, y}.
Expr parse_expr(std::string_view text);

/// Parses with `arity` variables: 1 allows x, 2 allows x and y. A variable outside the
/// arity raises ArityViolation.
std::variant<Poly1, Poly2> parse_poly(std::string_view text, const ContextPtr& ctx, int arity);
Poly1 parse_poly1(std::string_view text, const ContextPtr& ctx);
Poly2 parse_poly2(std::string_view text, const ContextPtr& ctx);
Element parse_element(std::string_view text, const ContextPtr& ctx);

/// Canonical descending-degree text; parse_poly(format_poly(p)) == p.
std::string format_poly(const Poly1& p);
std::string format_poly(const Poly2& p);

}  // namespace deficitlab
