#pragma once

// Exact coefficient arithmetic for a field pair F ⊂ K.
//
// A FieldContext fixes K (how elements are represented and multiplied) together with the
// designated sub-domain F (the membership predicate). Supported pairs:
//
//   Q                      F = K = Q
//   Q(sqrt D1, ...)        K = Q(√D1,...,√Dk) multi-quadratic tower, F = Q
//   Q[t]                   K = Q[t] with one transcendental symbol t, F = Q
//   GF(P^N; sub M)         K = GF(P^N), F = GF(P^M), M | N
//   Z<Q                    K = Q, F = Z (F is only a ring)
//   set:complementQ        K = Q[t], F = K \ Q (not a ring)
//   set:realsUnionImag     K = Q(i), F = {real or purely imaginary}
//
// Contexts and elements are immutable values and may be shared freely between threads.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deficitlab/error.hpp"
#include "deficitlab/expr.hpp"

namespace deficitlab {

enum class ContextKind { Rationals, MultiQuadratic, Transcendental, FiniteField, RingZInQ, SetContext };
enum class SetId { ComplementQ, RealsUnionImag };

struct ContextSpec {
    ContextKind kind = ContextKind::Rationals;
    std::vector<long> radicals;                    // MultiQuadratic
    std::uint64_t prime = 0;                       // FiniteField
    unsigned degree = 0;                           // FiniteField: K = GF(p^degree)
    unsigned sub_degree = 1;                       // FiniteField: F = GF(p^sub_degree)
    std::optional<std::vector<std::uint64_t>> modulus;  // FiniteField, low-to-high, monic
    SetId set_id = SetId::ComplementQ;             // SetContext

    /// Parses the field-spec mini-language (whitespace-insensitive).
    static ContextSpec parse(std::string_view text);
    /// Canonical text form; parses back to an equal spec.
    std::string to_string() const;

    friend bool operator==(const ContextSpec&, const ContextSpec&) = default;
};

/// How elements of a context are stored. Set contexts use their host's representation.
enum class Representation { Rational, Quadratic, TPoly, Residue };

class FieldContext;
using ContextPtr = std::shared_ptr<const FieldContext>;

/// Validates the spec and builds a context. Throws Error(RejectSpec) with a reason.
ContextPtr make_context(const ContextSpec& spec);
ContextPtr make_context(std::string_view spec_text);

class FieldContext {
public:
    const ContextSpec& spec() const noexcept { return spec_; }
    ContextKind kind() const noexcept { return spec_.kind; }
    Representation representation() const noexcept { return repr_; }
    std::uint64_t characteristic() const noexcept { return characteristic_; }
    /// False for Z<Q and the set contexts, where closure facts about F may fail.
    bool f_is_field() const noexcept { return f_is_field_; }
    /// Number of coordinates of the fixed-size representation; 0 for Q[t] (unbounded).
    std::size_t basis_size() const noexcept { return basis_size_; }
    std::string name() const { return spec_.to_string(); }

    /// Radicals of the (host) multi-quadratic tower.
    const std::vector<long>& radicals() const noexcept { return radicals_; }
    /// √S·√T = mask_factor(S & T)·√(S ^ T).
    const mpq_class& mask_factor(std::size_t mask) const { return mask_factors_[mask]; }
    /// Resolved monic modulus of a finite field, low-to-high, length degree + 1.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    std::uint64_t prime() const noexcept { return spec_.prime; }
    unsigned degree() const noexcept { return spec_.degree; }
    unsigned sub_degree() const noexcept { return spec_.sub_degree; }
    /// p^degree, the order of a finite field.
    std::uint64_t order() const noexcept { return order_; }

    /// Structural equality of the resolved context (kind, radicals, modulus, ...).
    bool same_as(const FieldContext& other) const noexcept;

private:
    friend ContextPtr make_context(const ContextSpec& spec);
    FieldContext() = default;

    ContextSpec spec_;
    Representation repr_ = Representation::Rational;
    std::uint64_t characteristic_ = 0;
    bool f_is_field_ = true;
    std::size_t basis_size_ = 1;
    std::vector<long> radicals_;
    std::vector<mpq_class> mask_factors_;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t order_ = 0;
};

/// One printable summand of an element: coefficient times a symbolic monomial
/// ("" for 1, "sqrt(2)*sqrt(3)", "t^2", "g", ...).
struct Term {
    mpq_class coefficient;
    std::string monomial;
};

/// Joins signed terms as "a + b - c"; "0" when empty. Output parses back with the
/// polynomial grammar.
std::string join_terms(const std::vector<Term>& terms);

class Element {
public:
    /// Zero of `ctx`.
    explicit Element(ContextPtr ctx);

    static Element zero(ContextPtr ctx) { return Element(std::move(ctx)); }
    static Element one(ContextPtr ctx) { return integer(std::move(ctx), 1); }
    static Element integer(ContextPtr ctx, long value);
    static Element integer(ContextPtr ctx, const mpz_class& value);
    static Element rational(ContextPtr ctx, const mpq_class& value);
    /// √d for any nonzero integer d whose square root lies in the tower.
    static Element sqrt(ContextPtr ctx, long d);
    /// The transcendental symbol t (Q[t] and set:complementQ).
    static Element transcendental(ContextPtr ctx);
    /// Residue class of the modulus variable in a finite field.
    static Element generator(ContextPtr ctx);
    /// Raw coordinates: basis-subset coordinates (Quadratic), t-coefficients (TPoly),
    /// or the single rational (Rational).
    static Element from_coordinates(ContextPtr ctx, std::vector<mpq_class> coords);
    static Element from_residues(ContextPtr ctx, std::vector<std::uint64_t> residues);

    const ContextPtr& context() const noexcept { return ctx_; }
    const std::vector<mpq_class>& coordinates() const noexcept { return coords_; }
    const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }

    bool is_zero() const noexcept;
    bool is_one() const;

    Element operator-() const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Element& rhs);
    Element& operator/=(const Element& rhs);
    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(Element lhs, const Element& rhs) { return lhs *= rhs; }
    friend Element operator/(Element lhs, const Element& rhs) { return lhs /= rhs; }

    Element inverse() const;
    Element pow(std::uint64_t exponent) const;

    /// Structural equality on canonical forms; elements of different contexts are unequal.
    friend bool operator==(const Element& a, const Element& b);

    std::vector<Term> terms() const;
    std::string to_string() const { return join_terms(terms()); }

private:
    void check_same_context(const Element& other) const;
    void normalize();

    ContextPtr ctx_;
    std::vector<mpq_class> coords_;
    std::vector<std::uint64_t> residues_;
};

enum class ArithOp { Add, Sub, Mul, Div };
Element arithmetic(ArithOp op, const Element& a, const Element& b);

/// The membership predicate "a ∈ F" of the element's context.
bool is_in_subfield(const Element& a);

/// a^(p^m) == a, i.e. membership in GF(p^m) inside a finite field.
bool frobenius_fixed(const Element& a, unsigned m);

std::uint64_t characteristic(const FieldContext& ctx) noexcept;

/// Evaluates a variable-free token tree. Throws UnknownSymbol for symbols the context
/// does not define (including x, y) and DivisionByZero for n/0.
Element element_from_literal(const ContextPtr& ctx, const Expr& literal);

}  // namespace deficitlab
