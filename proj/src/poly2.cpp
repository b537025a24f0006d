#include "deficitlab/poly2.hpp"

#include <algorithm>
#include <map>

namespace deficitlab {

namespace {

void require_same(const ContextPtr& a, const ContextPtr& b) {
    if (a.get() != b.get() && !a->same_as(*b))
        throw Error(ErrorCode::ContextMismatch, a->name() + " vs " + b->name());
}

}  // namespace

Poly2::Poly2(ContextPtr ctx) : ctx_(std::move(ctx)) {}

Poly2 Poly2::from_terms(ContextPtr ctx, const std::vector<Monomial>& terms) {
    Poly2 out(ctx);
    std::map<std::pair<std::size_t, std::size_t>, Element> acc;  // (total degree, x exponent)
    for (const Monomial& m : terms) {
        require_same(ctx, m.coefficient.context());
        const auto key = std::make_pair(m.x_exponent + m.y_exponent, m.x_exponent);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, m.coefficient);
        else
            it->second += m.coefficient;
    }
    for (auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        if (out.parts_.size() <= key.first) out.parts_.resize(key.first + 1);
        out.parts_[key.first].emplace_back(key.second, std::move(c));
    }
    out.trim();
    return out;
}

Poly2 Poly2::constant(const Element& c) { return from_terms(c.context(), {{0, 0, c}}); }

Poly2 Poly2::variable_x(ContextPtr ctx) { return from_terms(ctx, {{1, 0, Element::one(ctx)}}); }

Poly2 Poly2::variable_y(ContextPtr ctx) { return from_terms(ctx, {{0, 1, Element::one(ctx)}}); }

Poly2 Poly2::from_univariate(const Poly1& p) {
    std::vector<Monomial> terms;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) terms.push_back({k, 0, p.coefficients()[k]});
    return from_terms(p.context(), terms);
}

Element Poly2::coefficient(std::size_t x_exponent, std::size_t y_exponent) const {
    const std::size_t k = x_exponent + y_exponent;
    if (k < parts_.size())
        for (const auto& [ex, c] : parts_[k])
            if (ex == x_exponent) return c;
    return Element::zero(ctx_);
}

std::vector<Poly2::Monomial> Poly2::monomials() const {
    std::vector<Monomial> out;
    for (std::size_t k = 0; k < parts_.size(); ++k)
        for (const auto& [ex, c] : parts_[k]) out.push_back({ex, k - ex, c});
    return out;
}

std::size_t Poly2::total_degree() const {
    if (parts_.empty()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no degree");
    return parts_.size() - 1;
}

std::size_t Poly2::degree_in_y() const noexcept {
    std::size_t best = 0;
    for (std::size_t k = 0; k < parts_.size(); ++k)
        for (const auto& term : parts_[k]) best = std::max(best, k - term.first);
    return best;
}

void Poly2::check_same_context(const ContextPtr& other) const { require_same(ctx_, other); }

void Poly2::trim() {
    for (auto& part : parts_)
        part.erase(std::remove_if(part.begin(), part.end(), [](const auto& t) { return t.second.is_zero(); }),
                   part.end());
    while (!parts_.empty() && parts_.back().empty()) parts_.pop_back();
}

Poly2 Poly2::operator-() const {
    Poly2 out(*this);
    for (auto& part : out.parts_)
        for (auto& term : part) term.second = -term.second;
    return out;
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
    check_same_context(rhs.ctx_);
    if (parts_.size() < rhs.parts_.size()) parts_.resize(rhs.parts_.size());
    for (std::size_t k = 0; k < rhs.parts_.size(); ++k) {
        // merge two sorted term lists
        Part merged;
        const Part& a = parts_[k];
        const Part& b = rhs.parts_[k];
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                merged.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                merged.push_back(b[j++]);
            } else {
                merged.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i;
                ++j;
            }
        }
        parts_[k] = std::move(merged);
    }
    trim();
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) { return *this += -rhs; }

Poly2& Poly2::operator*=(const Poly2& rhs) {
    check_same_context(rhs.ctx_);
    if (parts_.empty() || rhs.parts_.empty()) {
        parts_.clear();
        return *this;
    }
    // Part k of the product only collects products of parts a, b with a + b = k.
    std::vector<std::vector<Element>> dense(parts_.size() + rhs.parts_.size() - 1);
    for (std::size_t k = 0; k < dense.size(); ++k) dense[k].assign(k + 1, Element::zero(ctx_));
    for (std::size_t a = 0; a < parts_.size(); ++a)
        for (const auto& [ea, ca] : parts_[a])
            for (std::size_t b = 0; b < rhs.parts_.size(); ++b)
                for (const auto& [eb, cb] : rhs.parts_[b]) dense[a + b][ea + eb] += ca * cb;
    parts_.assign(dense.size(), Part{});
    for (std::size_t k = 0; k < dense.size(); ++k)
        for (std::size_t ex = 0; ex <= k; ++ex)
            if (!dense[k][ex].is_zero()) parts_[k].emplace_back(ex, std::move(dense[k][ex]));
    trim();
    return *this;
}

Poly2 Poly2::scale(const Element& c) const {
    check_same_context(c.context());
    Poly2 out(*this);
    for (auto& part : out.parts_)
        for (auto& term : part) term.second *= c;
    out.trim();
    return out;
}

bool operator==(const Poly2& a, const Poly2& b) {
    if (a.ctx_.get() != b.ctx_.get() && !a.ctx_->same_as(*b.ctx_)) return false;
    return a.parts_ == b.parts_;
}

std::vector<HomogeneousPart> homogeneous_parts(const Poly2& p) {
    const std::size_t n = p.total_degree();
    std::vector<HomogeneousPart> out;
    for (std::size_t k = 0; k <= n; ++k) {
        const auto& part = p.parts()[k];
        if (part.empty()) continue;
        std::vector<Poly2::Monomial> terms;
        bool member = true;
        for (const auto& [ex, c] : part) {
            terms.push_back({ex, k - ex, c});
            member = member && is_in_subfield(c);
        }
        out.push_back({k, Poly2::from_terms(p.context(), terms), member});
    }
    return out;
}

bool in_f(const Poly2& p) {
    for (const auto& part : p.parts())
        for (const auto& term : part)
            if (!is_in_subfield(term.second)) return false;
    return true;
}

DeficitReport deficit2(const Poly2& p) {
    DeficitReport report;
    report.degree = p.total_degree();
    const auto parts = homogeneous_parts(p);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (!it->in_f) {
            report.in_f = false;
            report.top_non_f_index = it->degree;
            report.deficit = report.degree - it->degree;
            return report;
        }
    }
    report.deficit = report.degree;
    return report;
}

Poly2 compose_uni_bi(const Poly1& p, const Poly2& q) {
    require_same(p.context(), q.context());
    const auto& a = p.coefficients();
    Poly2 acc(p.context());
    for (std::size_t k = a.size(); k-- > 0;) {
        acc *= q;
        acc += Poly2::constant(a[k]);
    }
    return acc;
}

namespace {

// p(X, Y) for X, Y in a ring R with +, *, scale and a constant embedding.
template <class R, class MakeConstant>
R substitute(const Poly2& p, const R& x_value, const R& y_value, MakeConstant make_constant) {
    const ContextPtr& ctx = p.context();
    R result = make_constant(Element::zero(ctx));
    if (p.is_zero()) return result;
    const std::size_t n = p.total_degree();
    std::vector<R> x_pow{make_constant(Element::one(ctx))};
    std::vector<R> y_pow{make_constant(Element::one(ctx))};
    for (std::size_t k = 1; k <= n; ++k) {
        x_pow.push_back(x_pow.back() * x_value);
        y_pow.push_back(y_pow.back() * y_value);
    }
    for (const auto& m : p.monomials()) result += (x_pow[m.x_exponent] * y_pow[m.y_exponent]).scale(m.coefficient);
    return result;
}

}  // namespace

Poly1 diag_subst_uni(const Poly2& p, const Poly1& q) {
    require_same(p.context(), q.context());
    return substitute(p, q, q, [](const Element& c) { return Poly1::constant(c); });
}

Poly2 diag_subst_bi(const Poly2& p, const Poly2& q) {
    require_same(p.context(), q.context());
    return substitute(p, q, q, [](const Element& c) { return Poly2::constant(c); });
}

Poly1 to_univariate(const Poly2& p) {
    std::vector<Element> coeffs;
    for (const auto& m : p.monomials()) {
        if (m.y_exponent != 0) throw Error(ErrorCode::ArityViolation, "polynomial depends on y");
        if (coeffs.size() <= m.x_exponent) coeffs.resize(m.x_exponent + 1, Element::zero(p.context()));
        coeffs[m.x_exponent] = m.coefficient;
    }
    return Poly1(p.context(), std::move(coeffs));
}

}  // namespace deficitlab
