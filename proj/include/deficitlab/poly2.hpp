#pragma once

// Bivariate polynomials stored by homogeneous components.
//
// parts()[k] is the degree-k component p_k as (exponent of x, coefficient) pairs, the
// exponent of y being k minus the exponent of x. Exponents increase strictly within a part
// and only nonzero coefficients are stored; empty top parts are trimmed. Replacing the
// exponent of x by a multi-exponent extends the layout to r variables.

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "deficitlab/poly.hpp"

namespace deficitlab {

class Poly2 {
public:
    using Part = std::vector<std::pair<std::size_t, Element>>;

    struct Monomial {
        std::size_t x_exponent;
        std::size_t y_exponent;
        Element coefficient;
    };

    explicit Poly2(ContextPtr ctx);
    /// Sums duplicate monomials.
    static Poly2 from_terms(ContextPtr ctx, const std::vector<Monomial>& terms);
    static Poly2 constant(const Element& c);
    static Poly2 variable_x(ContextPtr ctx);
    static Poly2 variable_y(ContextPtr ctx);
    /// p(x) viewed in K[x, y].
    static Poly2 from_univariate(const Poly1& p);

    const ContextPtr& context() const noexcept { return ctx_; }
    const std::vector<Part>& parts() const noexcept { return parts_; }
    Element coefficient(std::size_t x_exponent, std::size_t y_exponent) const;
    /// All stored monomials, by total degree then exponent of x.
    std::vector<Monomial> monomials() const;

    bool is_zero() const noexcept { return parts_.empty(); }
    /// Throws ZeroPolynomial for the zero polynomial.
    std::size_t total_degree() const;
    std::size_t degree_in_y() const noexcept;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& rhs);
    Poly2& operator-=(const Poly2& rhs);
    Poly2& operator*=(const Poly2& rhs);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(Poly2 a, const Poly2& b) { return a *= b; }
    Poly2 scale(const Element& c) const;

    friend bool operator==(const Poly2& a, const Poly2& b);

private:
    void check_same_context(const ContextPtr& other) const;
    void trim();

    ContextPtr ctx_;
    std::vector<Part> parts_;
};

struct HomogeneousPart {
    std::size_t degree;
    Poly2 component;
    bool in_f;
};

/// Nonzero homogeneous components, ascending degree. Throws ZeroPolynomial.
std::vector<HomogeneousPart> homogeneous_parts(const Poly2& p);

bool in_f(const Poly2& p);

/// n minus the largest k with p_k outside F[x, y]; n when p ∈ F[x, y].
DeficitReport deficit2(const Poly2& p);

/// p(q(x, y)) by Horner in K[x, y].
Poly2 compose_uni_bi(const Poly1& p, const Poly2& q);

/// p(q(x), q(x)).
Poly1 diag_subst_uni(const Poly2& p, const Poly1& q);

/// p(q(x, y), q(x, y)).
Poly2 diag_subst_bi(const Poly2& p, const Poly2& q);

/// Drops y from a polynomial with y-degree 0; throws ArityViolation otherwise.
Poly1 to_univariate(const Poly2& p);

}  // namespace deficitlab
