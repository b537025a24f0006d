#include "deficitlab/poly.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace deficitlab {

Poly1::Poly1(ContextPtr ctx) : ctx_(std::move(ctx)) {}

Poly1::Poly1(ContextPtr ctx, std::vector<Element> coefficients) : ctx_(std::move(ctx)), coeffs_(std::move(coefficients)) {
    for (const Element& c : coeffs_) check_same_context(c.context());
    trim();
}

Poly1 Poly1::constant(const Element& c) { return Poly1(c.context(), {c}); }

Poly1 Poly1::monomial(const Element& c, std::size_t k) {
    std::vector<Element> coeffs(k + 1, Element::zero(c.context()));
    coeffs[k] = c;
    return Poly1(c.context(), std::move(coeffs));
}

Element Poly1::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Element::zero(ctx_);
}

std::size_t Poly1::degree() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no degree");
    return coeffs_.size() - 1;
}

const Element& Poly1::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

void Poly1::check_same_context(const ContextPtr& other) const {
    if (ctx_.get() != other.get() && !ctx_->same_as(*other))
        throw Error(ErrorCode::ContextMismatch, ctx_->name() + " vs " + other->name());
}

void Poly1::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly1 Poly1::operator-() const {
    Poly1 out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly1& Poly1::operator+=(const Poly1& rhs) {
    check_same_context(rhs.ctx_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Element::zero(ctx_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly1& Poly1::operator-=(const Poly1& rhs) { return *this += -rhs; }

Poly1& Poly1::operator*=(const Poly1& rhs) {
    check_same_context(rhs.ctx_);
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Element> out(coeffs_.size() + rhs.coeffs_.size() - 1, Element::zero(ctx_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly1 Poly1::scale(const Element& c) const {
    check_same_context(c.context());
    Poly1 out(*this);
    for (auto& a : out.coeffs_) a *= c;
    out.trim();
    return out;
}

bool operator==(const Poly1& a, const Poly1& b) {
    if (a.ctx_.get() != b.ctx_.get() && !a.ctx_->same_as(*b.ctx_)) return false;
    return a.coeffs_ == b.coeffs_;
}

PolyBasics poly_basics(const Poly1& p) { return {p.degree(), p.leading(), p.constant_term()}; }

bool in_f(const Poly1& p) {
    return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                       [](const Element& c) { return is_in_subfield(c); });
}

Poly1 compose(const Poly1& p, const Poly1& q) {
    if (!p.context()->same_as(*q.context()))
        throw Error(ErrorCode::ContextMismatch, p.context()->name() + " vs " + q.context()->name());
    const auto& a = p.coefficients();
    Poly1 acc(p.context());
    for (std::size_t k = a.size(); k-- > 0;) {
        acc *= q;
        acc += Poly1::constant(a[k]);
    }
    return acc;
}

std::size_t composed_size(std::size_t deg_p, std::size_t deg_q) noexcept {
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    if (deg_q != 0 && deg_p > (kMax - 1) / deg_q) return kMax;
    return deg_p * deg_q + 1;
}

Poly1 iterate(const Poly1& p, unsigned r, std::size_t max_coefficients) {
    if (r < 1) throw std::invalid_argument("iterate: r must be at least 1");
    if (!p.is_zero()) {
        const std::size_t n = p.degree();
        std::size_t degree = 1;
        for (unsigned i = 0; i < r; ++i) {
            const std::size_t next = composed_size(degree, n);
            if (next > max_coefficients)
                throw Error(ErrorCode::DegreeOverflow, "iterate " + std::to_string(r) + " of a degree-" +
                                                           std::to_string(n) + " polynomial exceeds " +
                                                           std::to_string(max_coefficients) + " coefficients");
            degree = next - 1;
        }
    }
    Poly1 acc = p;
    for (unsigned i = 1; i < r; ++i) acc = compose(p, acc);
    return acc;
}

DeficitReport deficit1(const Poly1& p) {
    DeficitReport report;
    report.degree = p.degree();
    const auto& a = p.coefficients();
    for (std::size_t k = a.size(); k-- > 0;) {
        if (!is_in_subfield(a[k])) {
            report.in_f = false;
            report.top_non_f_index = k;
            report.deficit = report.degree - k;
            return report;
        }
    }
    report.deficit = report.degree;
    return report;
}

}  // namespace deficitlab
