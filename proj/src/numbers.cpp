#include "deficitlab/numbers.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "deficitlab/gf_poly.hpp"

namespace deficitlab {

namespace {

constexpr std::size_t kMaxRadicals = 6;
constexpr long kMaxRadicalMagnitude = 1'000'000'000'000L;
constexpr unsigned long kMaxLiteralExponent = 4096;

[[noreturn]] void reject(const std::string& why) { throw Error(ErrorCode::RejectSpec, why); }

std::string strip_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
    return out;
}

template <class Int>
Int parse_int(std::string_view text, const char* what) {
    Int value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        reject(std::string("bad ") + what + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) return parts;
        start = pos + 1;
    }
}

bool is_square_free(long d) {
    const unsigned long n = static_cast<unsigned long>(d < 0 ? -d : d);
    for (unsigned long k = 2; k * k <= n; ++k)
        if (n % (k * k) == 0) return false;
    return true;
}

bool is_perfect_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace

// ---------------------------------------------------------------------------
// ContextSpec

ContextSpec ContextSpec::parse(std::string_view text) {
    const std::string s = strip_whitespace(text);
    ContextSpec spec;
    if (s == "Q") return spec;
    if (s == "Q[t]") {
        spec.kind = ContextKind::Transcendental;
        return spec;
    }
    if (s == "Z<Q") {
        spec.kind = ContextKind::RingZInQ;
        return spec;
    }
    if (s == "set:complementQ") {
        spec.kind = ContextKind::SetContext;
        spec.set_id = SetId::ComplementQ;
        return spec;
    }
    if (s == "set:realsUnionImag") {
        spec.kind = ContextKind::SetContext;
        spec.set_id = SetId::RealsUnionImag;
        return spec;
    }
    const std::string_view view(s);
    if (view.starts_with("Q(") && view.ends_with(")")) {
        spec.kind = ContextKind::MultiQuadratic;
        for (std::string_view item : split(view.substr(2, view.size() - 3), ',')) {
            if (!item.starts_with("sqrt")) reject("expected 'sqrt D' in '" + std::string(text) + "'");
            spec.radicals.push_back(parse_int<long>(item.substr(4), "radical"));
        }
        return spec;
    }
    if (view.starts_with("GF(") && view.ends_with(")")) {
        spec.kind = ContextKind::FiniteField;
        const auto clauses = split(view.substr(3, view.size() - 4), ';');
        const std::string_view order = clauses.front();
        const std::size_t caret = order.find('^');
        if (caret == std::string_view::npos) reject("expected 'P^N' in '" + std::string(text) + "'");
        spec.prime = parse_int<std::uint64_t>(order.substr(0, caret), "prime");
        spec.degree = parse_int<unsigned>(order.substr(caret + 1), "degree");
        for (std::size_t i = 1; i < clauses.size(); ++i) {
            const std::string_view clause = clauses[i];
            if (clause.starts_with("sub")) {
                spec.sub_degree = parse_int<unsigned>(clause.substr(3), "subfield degree");
            } else if (clause.starts_with("mod")) {
                std::vector<std::uint64_t> coeffs;
                for (std::string_view c : split(clause.substr(3), ','))
                    coeffs.push_back(parse_int<std::uint64_t>(c, "modulus coefficient"));
                spec.modulus = std::move(coeffs);
            } else {
                reject("unknown clause '" + std::string(clause) + "'");
            }
        }
        return spec;
    }
    reject("unrecognized field spec '" + std::string(text) + "'");
}

std::string ContextSpec::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case ContextKind::Rationals: out << "Q"; break;
        case ContextKind::Transcendental: out << "Q[t]"; break;
        case ContextKind::RingZInQ: out << "Z<Q"; break;
        case ContextKind::SetContext:
            out << (set_id == SetId::ComplementQ ? "set:complementQ" : "set:realsUnionImag");
            break;
        case ContextKind::MultiQuadratic:
            out << "Q(";
            for (std::size_t i = 0; i < radicals.size(); ++i) out << (i ? ", " : "") << "sqrt " << radicals[i];
            out << ")";
            break;
        case ContextKind::FiniteField:
            out << "GF(" << prime << "^" << degree;
            if (sub_degree != 1) out << "; sub " << sub_degree;
            if (modulus) {
                out << "; mod ";
                for (std::size_t i = 0; i < modulus->size(); ++i) out << (i ? "," : "") << (*modulus)[i];
            }
            out << ")";
            break;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// FieldContext

namespace {

void setup_tower(std::vector<long>& radicals_out, std::vector<mpq_class>& factors_out,
                 const std::vector<long>& radicals) {
    if (radicals.empty()) reject("multi-quadratic tower needs at least one radical");
    if (radicals.size() > kMaxRadicals) reject("at most 6 radicals are supported");
    for (std::size_t i = 0; i < radicals.size(); ++i) {
        const long d = radicals[i];
        if (d == 0 || d == 1) reject("radical " + std::to_string(d) + " is not allowed");
        if (d > kMaxRadicalMagnitude || d < -kMaxRadicalMagnitude) reject("radical magnitude too large");
        if (!is_square_free(d)) reject("radical " + std::to_string(d) + " is not square-free");
        for (std::size_t j = 0; j < i; ++j)
            if (radicals[j] == d) reject("radical " + std::to_string(d) + " repeated");
    }
    const std::size_t size = std::size_t{1} << radicals.size();
    factors_out.assign(size, mpq_class(1));
    for (std::size_t mask = 1; mask < size; ++mask) {
        mpz_class product = 1;
        for (std::size_t j = 0; j < radicals.size(); ++j)
            if (mask & (std::size_t{1} << j)) product *= radicals[j];
        if (is_perfect_square(product))
            reject("product of radicals " + product.get_str() + " is a perfect square; radicals are dependent");
        factors_out[mask] = mpq_class(product);
    }
    radicals_out = radicals;
}

}  // namespace

ContextPtr make_context(const ContextSpec& spec) {
    std::shared_ptr<FieldContext> ctx(new FieldContext());
    ctx->spec_ = spec;
    switch (spec.kind) {
        case ContextKind::Rationals:
            ctx->repr_ = Representation::Rational;
            break;
        case ContextKind::RingZInQ:
            ctx->repr_ = Representation::Rational;
            ctx->f_is_field_ = false;
            break;
        case ContextKind::Transcendental:
            ctx->repr_ = Representation::TPoly;
            ctx->basis_size_ = 0;
            break;
        case ContextKind::MultiQuadratic:
            ctx->repr_ = Representation::Quadratic;
            setup_tower(ctx->radicals_, ctx->mask_factors_, spec.radicals);
            ctx->basis_size_ = ctx->mask_factors_.size();
            break;
        case ContextKind::SetContext:
            ctx->f_is_field_ = false;
            if (spec.set_id == SetId::ComplementQ) {
                ctx->repr_ = Representation::TPoly;
                ctx->basis_size_ = 0;
            } else {
                ctx->repr_ = Representation::Quadratic;
                setup_tower(ctx->radicals_, ctx->mask_factors_, {-1});
                ctx->basis_size_ = 2;
            }
            break;
        case ContextKind::FiniteField: {
            const std::uint64_t p = spec.prime;
            const unsigned n = spec.degree;
            if (!gfp::is_prime(p)) reject(std::to_string(p) + " is not prime");
            if (p > std::numeric_limits<std::uint32_t>::max()) reject("prime too large");
            if (n < 1) reject("degree must be at least 1");
            if (spec.sub_degree < 1 || spec.sub_degree > n) reject("subfield degree out of range");
            if (n % spec.sub_degree != 0)
                reject("subfield degree " + std::to_string(spec.sub_degree) + " does not divide " + std::to_string(n));
            std::uint64_t order = 1;
            for (unsigned i = 0; i < n; ++i) {
                if (order > (std::uint64_t{1} << 62) / p) reject("field order too large");
                order *= p;
            }
            if (spec.modulus) {
                const auto& f = *spec.modulus;
                if (f.size() != n + 1) reject("modulus must have degree " + std::to_string(n));
                for (auto c : f)
                    if (c >= p) reject("modulus coefficient out of range 0..p-1");
                if (f.back() != 1) reject("modulus must be monic");
                if (!gfp::is_irreducible(f, p)) reject("modulus is reducible over GF(" + std::to_string(p) + ")");
                ctx->modulus_ = f;
            } else {
                ctx->modulus_ = gfp::smallest_irreducible(p, n);
            }
            ctx->repr_ = Representation::Residue;
            ctx->characteristic_ = p;
            ctx->order_ = order;
            ctx->basis_size_ = n;
            break;
        }
    }
    return ctx;
}

ContextPtr make_context(std::string_view spec_text) { return make_context(ContextSpec::parse(spec_text)); }

bool FieldContext::same_as(const FieldContext& other) const noexcept {
    if (this == &other) return true;
    return spec_.kind == other.spec_.kind && spec_.set_id == other.spec_.set_id && radicals_ == other.radicals_ &&
           spec_.prime == other.spec_.prime && spec_.degree == other.spec_.degree &&
           spec_.sub_degree == other.spec_.sub_degree && modulus_ == other.modulus_;
}

std::uint64_t characteristic(const FieldContext& ctx) noexcept { return ctx.characteristic(); }

// ---------------------------------------------------------------------------
// Term formatting

std::string join_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& term : terms) {
        const bool negative = term.coefficient < 0;
        const mpq_class magnitude = abs(term.coefficient);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (term.monomial.empty()) {
            out += magnitude.get_str();
        } else if (magnitude == 1) {
            // "-x^2" would read as (-x)^2, so a leading minus needs an explicit 1.
            const std::string head = term.monomial.substr(0, term.monomial.find('*'));
            if (first && negative && head.find('^') != std::string::npos) out += "1*";
            out += term.monomial;
        } else {
            out += magnitude.get_str() + "*" + term.monomial;
        }
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Element

namespace {

using Coords = std::vector<mpq_class>;

Coords quad_mul(const FieldContext& ctx, const Coords& a, const Coords& b) {
    Coords out(a.size(), mpq_class(0));
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (sgn(a[s]) == 0) continue;
        for (std::size_t t = 0; t < b.size(); ++t) {
            if (sgn(b[t]) == 0) continue;
            out[s ^ t] += a[s] * b[t] * ctx.mask_factor(s & t);
        }
    }
    return out;
}

// (u + v√d)⁻¹ = (u − v√d)/(u² − d v²), recursing down the tower.
Coords quad_inv(const FieldContext& ctx, const Coords& a) {
    if (a.size() == 1) return {mpq_class(1) / a[0]};
    const std::size_t half = a.size() / 2;
    std::size_t level = 0;
    while ((std::size_t{1} << level) < a.size()) ++level;
    const mpq_class d(ctx.radicals()[level - 1]);
    const Coords u(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(half));
    const Coords v(a.begin() + static_cast<std::ptrdiff_t>(half), a.end());
    Coords norm = quad_mul(ctx, u, u);
    const Coords vv = quad_mul(ctx, v, v);
    for (std::size_t i = 0; i < half; ++i) norm[i] -= d * vv[i];
    const Coords norm_inv = quad_inv(ctx, norm);
    const Coords lo = quad_mul(ctx, u, norm_inv);
    const Coords hi = quad_mul(ctx, v, norm_inv);
    Coords out(a.size());
    for (std::size_t i = 0; i < half; ++i) {
        out[i] = lo[i];
        out[half + i] = -hi[i];
    }
    return out;
}

Coords tpoly_mul(const Coords& a, const Coords& b) {
    if (a.empty() || b.empty()) return {};
    Coords out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

void trim_coords(Coords& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return r.get_ui();
}

std::string radical_symbol(long d) { return d == -1 ? "i" : "sqrt(" + std::to_string(d) + ")"; }

std::string power_symbol(const char* name, std::size_t k) {
    if (k == 1) return name;
    return std::string(name) + "^" + std::to_string(k);
}

}  // namespace

Element::Element(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("Element: null context");
    switch (ctx_->representation()) {
        case Representation::Rational: coords_.assign(1, mpq_class(0)); break;
        case Representation::Quadratic: coords_.assign(ctx_->basis_size(), mpq_class(0)); break;
        case Representation::TPoly: break;
        case Representation::Residue: residues_.assign(ctx_->degree(), 0); break;
    }
}

Element Element::integer(ContextPtr ctx, long value) { return integer(std::move(ctx), mpz_class(value)); }

Element Element::integer(ContextPtr ctx, const mpz_class& value) {
    Element e(std::move(ctx));
    switch (e.ctx_->representation()) {
        case Representation::Residue: e.residues_[0] = reduce_mod(value, e.ctx_->prime()); break;
        case Representation::TPoly:
            if (value != 0) e.coords_.assign(1, mpq_class(value));
            break;
        default: e.coords_[0] = mpq_class(value); break;
    }
    return e;
}

Element Element::rational(ContextPtr ctx, const mpq_class& value) {
    if (ctx->representation() != Representation::Residue) {
        Element e = integer(std::move(ctx), 0);
        if (sgn(value) != 0) {
            if (e.coords_.empty()) e.coords_.emplace_back();
            e.coords_[0] = value;
            e.coords_[0].canonicalize();
        }
        return e;
    }
    const std::uint64_t p = ctx->prime();
    const std::uint64_t den = reduce_mod(value.get_den(), p);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes modulo " + std::to_string(p));
    Element e(std::move(ctx));
    e.residues_[0] = gfp::mul_mod(reduce_mod(value.get_num(), p), gfp::inv_mod(den, p), p);
    return e;
}

Element Element::sqrt(ContextPtr ctx, long d) {
    Element e(ctx);
    if (d == 0) return e;
    const std::string what = "sqrt(" + std::to_string(d) + ")";
    switch (ctx->representation()) {
        case Representation::Quadratic: {
            // Exactly one basis subset S makes d·∏S a square when √d lies in the tower.
            for (std::size_t mask = 0; mask < ctx->basis_size(); ++mask) {
                const mpz_class product = ctx->mask_factor(mask).get_num();
                const mpz_class dp = product * d;
                if (!is_perfect_square(dp)) continue;
                mpz_class root;
                mpz_sqrt(root.get_mpz_t(), dp.get_mpz_t());
                mpq_class c(root, mpz_class(abs(product)));
                c.canonicalize();
                // √S = i^k·√|∏S| for k negative radicals; fix the principal branch.
                unsigned negatives = 0;
                for (std::size_t j = 0; j < ctx->radicals().size(); ++j)
                    if ((mask >> j) & 1U && ctx->radicals()[j] < 0) ++negatives;
                if ((negatives / 2) % 2 == 1) c = -c;
                e.coords_[mask] = c;
                return e;
            }
            throw Error(ErrorCode::UnknownSymbol, what + " is not in " + ctx->name());
        }
        case Representation::Rational:
        case Representation::TPoly: {
            const mpz_class n(d);
            if (!is_perfect_square(n)) throw Error(ErrorCode::UnknownSymbol, what + " is not in " + ctx->name());
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
            return integer(std::move(ctx), root);
        }
        case Representation::Residue: break;
    }
    throw Error(ErrorCode::UnknownSymbol, what + " is not available in " + ctx->name());
}

Element Element::transcendental(ContextPtr ctx) {
    if (ctx->representation() != Representation::TPoly)
        throw Error(ErrorCode::UnknownSymbol, "symbol t is not defined in " + ctx->name());
    Element e(std::move(ctx));
    e.coords_ = {mpq_class(0), mpq_class(1)};
    return e;
}

Element Element::generator(ContextPtr ctx) {
    if (ctx->representation() != Representation::Residue)
        throw Error(ErrorCode::UnknownSymbol, "symbol g is not defined in " + ctx->name());
    return from_residues(std::move(ctx), {0, 1});
}

Element Element::from_coordinates(ContextPtr ctx, std::vector<mpq_class> coords) {
    Element e(std::move(ctx));
    switch (e.ctx_->representation()) {
        case Representation::Residue: throw std::invalid_argument("from_coordinates on a finite field");
        case Representation::TPoly: break;
        case Representation::Rational:
        case Representation::Quadratic:
            if (coords.size() != e.coords_.size()) throw std::invalid_argument("coordinate count mismatch");
            break;
    }
    for (auto& c : coords) c.canonicalize();
    e.coords_ = std::move(coords);
    e.normalize();
    return e;
}

Element Element::from_residues(ContextPtr ctx, std::vector<std::uint64_t> residues) {
    if (ctx->representation() != Representation::Residue) throw std::invalid_argument("from_residues needs a finite field");
    Element e(std::move(ctx));
    const std::uint64_t p = e.ctx_->prime();
    for (auto& r : residues) r %= p;
    gfp::Poly reduced = gfp::rem(std::move(residues), e.ctx_->modulus(), p);
    reduced.resize(e.ctx_->degree(), 0);
    e.residues_ = std::move(reduced);
    return e;
}

void Element::normalize() {
    if (ctx_->representation() == Representation::TPoly) trim_coords(coords_);
}

void Element::check_same_context(const Element& other) const {
    if (ctx_.get() != other.ctx_.get() && !ctx_->same_as(*other.ctx_))
        throw Error(ErrorCode::ContextMismatch, ctx_->name() + " vs " + other.ctx_->name());
}

bool Element::is_zero() const noexcept {
    if (ctx_->representation() == Representation::Residue)
        return std::all_of(residues_.begin(), residues_.end(), [](std::uint64_t r) { return r == 0; });
    return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

bool Element::is_one() const { return *this == one(ctx_); }

Element Element::operator-() const {
    Element out(*this);
    if (ctx_->representation() == Representation::Residue) {
        const std::uint64_t p = ctx_->prime();
        for (auto& r : out.residues_) r = (p - r) % p;
    } else {
        for (auto& c : out.coords_) c = -c;
    }
    return out;
}

Element& Element::operator+=(const Element& rhs) {
    check_same_context(rhs);
    if (ctx_->representation() == Representation::Residue) {
        const std::uint64_t p = ctx_->prime();
        for (std::size_t i = 0; i < residues_.size(); ++i) residues_[i] = (residues_[i] + rhs.residues_[i]) % p;
        return *this;
    }
    if (coords_.size() < rhs.coords_.size()) coords_.resize(rhs.coords_.size(), mpq_class(0));
    for (std::size_t i = 0; i < rhs.coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    normalize();
    return *this;
}

Element& Element::operator-=(const Element& rhs) { return *this += -rhs; }

Element& Element::operator*=(const Element& rhs) {
    check_same_context(rhs);
    switch (ctx_->representation()) {
        case Representation::Rational: coords_[0] *= rhs.coords_[0]; break;
        case Representation::Quadratic: coords_ = quad_mul(*ctx_, coords_, rhs.coords_); break;
        case Representation::TPoly:
            coords_ = tpoly_mul(coords_, rhs.coords_);
            normalize();
            break;
        case Representation::Residue: {
            const std::uint64_t p = ctx_->prime();
            gfp::Poly product = gfp::rem(gfp::mul(residues_, rhs.residues_, p), ctx_->modulus(), p);
            product.resize(ctx_->degree(), 0);
            residues_ = std::move(product);
            break;
        }
    }
    return *this;
}

Element& Element::operator/=(const Element& rhs) {
    check_same_context(rhs);
    if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    if (ctx_->representation() != Representation::TPoly) return *this *= rhs.inverse();

    // Exact long division in Q[t].
    Coords rem = coords_;
    const Coords& div = rhs.coords_;
    if (rem.size() < div.size()) {
        if (rem.empty()) return *this;
        throw Error(ErrorCode::NotInvertible, "quotient leaves Q[t]");
    }
    Coords quot(rem.size() - div.size() + 1, mpq_class(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const mpq_class c = rem[k + div.size() - 1] / div.back();
        quot[k] = c;
        for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= c * div[j];
    }
    trim_coords(rem);
    if (!rem.empty()) throw Error(ErrorCode::NotInvertible, "quotient leaves Q[t]");
    coords_ = std::move(quot);
    normalize();
    return *this;
}

Element Element::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    Element out(ctx_);
    switch (ctx_->representation()) {
        case Representation::Rational: out.coords_[0] = mpq_class(1) / coords_[0]; break;
        case Representation::Quadratic: out.coords_ = quad_inv(*ctx_, coords_); break;
        case Representation::TPoly:
            if (coords_.size() != 1) throw Error(ErrorCode::NotInvertible, to_string() + " is not a unit of Q[t]");
            out.coords_ = {mpq_class(1) / coords_[0]};
            break;
        case Representation::Residue: return pow(ctx_->order() - 2);
    }
    return out;
}

Element Element::pow(std::uint64_t exponent) const {
    Element result = one(ctx_);
    Element base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

bool operator==(const Element& a, const Element& b) {
    if (a.ctx_.get() != b.ctx_.get() && !a.ctx_->same_as(*b.ctx_)) return false;
    return a.coords_ == b.coords_ && a.residues_ == b.residues_;
}

std::vector<Term> Element::terms() const {
    std::vector<Term> out;
    switch (ctx_->representation()) {
        case Representation::Rational:
            if (sgn(coords_[0]) != 0) out.push_back({coords_[0], ""});
            break;
        case Representation::Quadratic:
            for (std::size_t mask = 0; mask < coords_.size(); ++mask) {
                if (sgn(coords_[mask]) == 0) continue;
                std::string mono;
                for (std::size_t j = 0; j < ctx_->radicals().size(); ++j) {
                    if (!((mask >> j) & 1U)) continue;
                    if (!mono.empty()) mono += "*";
                    mono += radical_symbol(ctx_->radicals()[j]);
                }
                out.push_back({coords_[mask], mono});
            }
            break;
        case Representation::TPoly:
            for (std::size_t k = coords_.size(); k-- > 0;)
                if (sgn(coords_[k]) != 0) out.push_back({coords_[k], k == 0 ? "" : power_symbol("t", k)});
            break;
        case Representation::Residue:
            for (std::size_t k = residues_.size(); k-- > 0;)
                if (residues_[k] != 0)
                    out.push_back({mpq_class(mpz_class(std::to_string(residues_[k]))), k == 0 ? "" : power_symbol("g", k)});
            break;
    }
    return out;
}

Element arithmetic(ArithOp op, const Element& a, const Element& b) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw std::logic_error("unreachable");
}

bool frobenius_fixed(const Element& a, unsigned m) {
    const FieldContext& ctx = *a.context();
    if (ctx.representation() != Representation::Residue) throw std::invalid_argument("frobenius_fixed needs a finite field");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) q *= ctx.prime();
    return a.pow(q) == a;
}

bool is_in_subfield(const Element& a) {
    const FieldContext& ctx = *a.context();
    const auto& c = a.coordinates();
    switch (ctx.kind()) {
        case ContextKind::Rationals: return true;
        case ContextKind::MultiQuadratic:
            return std::all_of(c.begin() + 1, c.end(), [](const mpq_class& x) { return sgn(x) == 0; });
        case ContextKind::Transcendental: return c.size() <= 1;
        case ContextKind::RingZInQ: return c[0].get_den() == 1;
        case ContextKind::FiniteField: {
            if (ctx.sub_degree() == 1) {
                const auto& r = a.residues();
                return std::all_of(r.begin() + 1, r.end(), [](std::uint64_t x) { return x == 0; });
            }
            return frobenius_fixed(a, ctx.sub_degree());
        }
        case ContextKind::SetContext:
            if (ctx.spec().set_id == SetId::ComplementQ) return c.size() >= 2;
            return sgn(c[0]) == 0 || sgn(c[1]) == 0;
    }
    return false;
}

Element element_from_literal(const ContextPtr& ctx, const Expr& literal) {
    switch (literal.kind) {
        case Expr::Kind::Integer: return Element::integer(ctx, literal.numerator);
        case Expr::Kind::Fraction: {
            if (literal.denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator", literal.position);
            return Element::rational(ctx, mpq_class(literal.numerator, literal.denominator));
        }
        case Expr::Kind::Sqrt: return Element::sqrt(ctx, literal.radicand);
        case Expr::Kind::Symbol:
            switch (literal.symbol) {
                case 'i':
                    if (ctx->representation() == Representation::Quadratic) return Element::sqrt(ctx, -1);
                    break;
                case 't': return Element::transcendental(ctx);
                case 'g': return Element::generator(ctx);
                default: break;
            }
            throw Error(ErrorCode::UnknownSymbol,
                        std::string("symbol '") + literal.symbol + "' is not defined in " + ctx->name(), literal.position);
        case Expr::Kind::Negate: return -element_from_literal(ctx, literal.children.at(0));
        case Expr::Kind::Sum: {
            Element acc(ctx);
            for (const Expr& child : literal.children) acc += element_from_literal(ctx, child);
            return acc;
        }
        case Expr::Kind::Product: {
            Element acc = Element::one(ctx);
            for (const Expr& child : literal.children) acc *= element_from_literal(ctx, child);
            return acc;
        }
        case Expr::Kind::Power: {
            if (literal.exponent > kMaxLiteralExponent)
                throw Error(ErrorCode::DegreeOverflow, "exponent too large", literal.position);
            return element_from_literal(ctx, literal.children.at(0)).pow(literal.exponent);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace deficitlab
