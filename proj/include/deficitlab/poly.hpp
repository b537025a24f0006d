#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deficitlab/numbers.hpp"

namespace deficitlab {

/// Default bound on the number of coefficients an iterate may produce.
inline constexpr std::size_t kDefaultCoefficientCap = 4096;

/// Outcome of the F-deficit computation.
///
/// in_f            every coefficient lies in F; then deficit == degree
/// top_non_f_index largest k with a_k outside F (absent when in_f)
/// deficit         degree - top_non_f_index
struct DeficitReport {
    std::size_t degree = 0;
    bool in_f = true;
    std::optional<std::size_t> top_non_f_index;
    std::size_t deficit = 0;

    friend bool operator==(const DeficitReport&, const DeficitReport&) = default;
};

/// Dense univariate polynomial, coefficients low-to-high with trailing zeros trimmed.
class Poly1 {
public:
    explicit Poly1(ContextPtr ctx);
    Poly1(ContextPtr ctx, std::vector<Element> coefficients);

    static Poly1 constant(const Element& c);
    static Poly1 monomial(const Element& c, std::size_t k);
    static Poly1 variable(ContextPtr ctx) { return monomial(Element::one(ctx), 1); }

    const ContextPtr& context() const noexcept { return ctx_; }
    const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
    /// a_k, or zero past the degree.
    Element coefficient(std::size_t k) const;

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Throws ZeroPolynomial for the zero polynomial.
    std::size_t degree() const;
    const Element& leading() const;
    Element constant_term() const { return coefficient(0); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    Poly1 operator-() const;
    Poly1& operator+=(const Poly1& rhs);
    Poly1& operator-=(const Poly1& rhs);
    Poly1& operator*=(const Poly1& rhs);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(Poly1 a, const Poly1& b) { return a *= b; }
    Poly1 scale(const Element& c) const;

    friend bool operator==(const Poly1& a, const Poly1& b);

private:
    void check_same_context(const ContextPtr& other) const;
    void trim();

    ContextPtr ctx_;
    std::vector<Element> coeffs_;
};

struct PolyBasics {
    std::size_t degree;
    Element leading;
    Element constant;
};

/// Degree, leading coefficient and constant term; throws ZeroPolynomial on zero.
PolyBasics poly_basics(const Poly1& p);

/// True when every coefficient passes is_in_subfield (vacuously for zero).
bool in_f(const Poly1& p);

/// p∘q by Horner evaluation of p at q.
Poly1 compose(const Poly1& p, const Poly1& q);

/// r-fold self-composition, r ≥ 1. Throws DegreeOverflow when deg(p)^r + 1 exceeds
/// `max_coefficients`.
Poly1 iterate(const Poly1& p, unsigned r, std::size_t max_coefficients = kDefaultCoefficientCap);

/// Number of coefficients p∘q will have, saturating; used for cap checks.
std::size_t composed_size(std::size_t deg_p, std::size_t deg_q) noexcept;

DeficitReport deficit1(const Poly1& p);

}  // namespace deficitlab
