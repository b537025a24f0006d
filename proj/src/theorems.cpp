#include "deficitlab/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "deficitlab/parser.hpp"

namespace deficitlab {

namespace {

constexpr std::size_t kMaxRecordedCounterexamples = 8;

struct IdName {
    TheoremId id;
    std::string_view name;
};

constexpr IdName kIdNames[] = {
    {TheoremId::T1, "T1"},       {TheoremId::C1, "C1"},
    {TheoremId::T1A, "T1A"},     {TheoremId::T2, "T2"},
    {TheoremId::P1, "P1"},       {TheoremId::L1, "L1"},
    {TheoremId::T3, "T3"},       {TheoremId::T4, "T4"},
    {TheoremId::IterIneq, "ITER_INEQ"}, {TheoremId::T5, "T5"},
    {TheoremId::Ring, "RING"},   {TheoremId::FF, "FF"},
    {TheoremId::TwoVar, "TWO_VAR"}, {TheoremId::DeficitSetT1, "DEFICIT_SET_T1"},
};

bool is_pair_theorem(TheoremId id) {
    switch (id) {
        case TheoremId::T4:
        case TheoremId::IterIneq:
        case TheoremId::T5:
        case TheoremId::TwoVar: return false;
        default: return true;
    }
}

bool is_iterate_theorem(TheoremId id) {
    return id == TheoremId::T4 || id == TheoremId::IterIneq || id == TheoremId::T5;
}

bool some_non_f_at_positive_index(const Poly1& q) {
    const auto& b = q.coefficients();
    for (std::size_t j = 1; j < b.size(); ++j)
        if (!is_in_subfield(b[j])) return true;
    return false;
}

std::vector<std::size_t> non_f_indices(const Poly1& p) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        if (!is_in_subfield(p.coefficients()[k])) out.push_back(k);
    return out;
}

void require_context(const ContextPtr& ctx, const ContextPtr& other) {
    if (!ctx->same_as(*other)) throw Error(ErrorCode::ContextMismatch, ctx->name() + " vs " + other->name());
}

class VerdictBuilder {
public:
    VerdictBuilder(TheoremId id, const ContextPtr& ctx) {
        v_.id = id;
        v_.context = ctx->name();
    }
    void hypothesis(std::string name, bool holds) { v_.hypotheses.push_back({std::move(name), holds}); }
    void conclusion(std::string name, bool holds) { v_.conclusions.push_back({std::move(name), holds}); }
    void witness(std::string label, const DeficitReport& r) { v_.witnesses.push_back({std::move(label), r}); }
    void offending(std::vector<std::size_t> idx) { v_.offending_indices = std::move(idx); }

    TheoremVerdict finish() {
        v_.hypotheses_met = std::all_of(v_.hypotheses.begin(), v_.hypotheses.end(), [](auto& h) { return h.holds; });
        v_.conclusion_holds =
            std::all_of(v_.conclusions.begin(), v_.conclusions.end(), [](auto& c) { return c.holds; });
        if (!v_.hypotheses_met)
            v_.classification = Classification::Vacuous;
        else
            v_.classification =
                v_.conclusion_holds ? Classification::Confirms : Classification::CounterexampleToConclusion;
        return std::move(v_);
    }

private:
    TheoremVerdict v_;
};

}  // namespace

std::string_view to_string(TheoremId id) noexcept {
    for (const auto& entry : kIdNames)
        if (entry.id == id) return entry.name;
    return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
    for (const auto& entry : kIdNames)
        if (entry.name == name) return entry.id;
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> out;
        for (const auto& entry : kIdNames) out.push_back(entry.id);
        return out;
    }();
    return ids;
}

std::string_view to_string(Classification c) noexcept {
    switch (c) {
        case Classification::Confirms: return "CONFIRMS";
        case Classification::Vacuous: return "VACUOUS";
        case Classification::CounterexampleToConclusion: return "COUNTEREXAMPLE_TO_CONCLUSION";
    }
    return "?";
}

std::string TheoremVerdict::failed_hypothesis() const {
    for (const auto& h : hypotheses)
        if (!h.holds) return h.name;
    return {};
}

const DeficitReport* TheoremVerdict::witness(std::string_view label) const {
    for (const auto& w : witnesses)
        if (w.label == label) return &w.report;
    return nullptr;
}

bool admissible(TheoremId id, const FieldContext& ctx) noexcept {
    switch (id) {
        case TheoremId::Ring: return ctx.kind() == ContextKind::RingZInQ;
        case TheoremId::FF: return ctx.kind() == ContextKind::FiniteField;
        case TheoremId::DeficitSetT1: return ctx.kind() == ContextKind::SetContext;
        default: return ctx.f_is_field() && ctx.characteristic() == 0;
    }
}

TheoremVerdict verify_theorem(TheoremId id, const TheoremInputs& in, const ContextPtr& ctx) {
    const std::string name(to_string(id));
    if (is_pair_theorem(id)) {
        if (!in.p || !in.q || in.q2) throw Error(ErrorCode::ArityMismatch, name + " takes univariate p and q");
    } else if (is_iterate_theorem(id)) {
        if (!in.p || in.q || in.q2 || in.r < 1)
            throw Error(ErrorCode::ArityMismatch, name + " takes univariate p and r >= 1");
    } else if (!in.p || !in.q2 || in.q) {
        throw Error(ErrorCode::ArityMismatch, name + " takes univariate p and bivariate q");
    }
    if (!admissible(id, *ctx)) throw Error(ErrorCode::InadmissibleContext, name + " cannot be checked over " + ctx->name());

    const Poly1& p = *in.p;
    require_context(ctx, p.context());
    VerdictBuilder b(id, ctx);
    const DeficitReport dp = deficit1(p);
    b.witness("p", dp);
    const bool p_nonconstant = dp.degree >= 1;
    const bool an_in_f = is_in_subfield(p.leading());

    if (id == TheoremId::TwoVar) {
        const Poly2& q = *in.q2;
        require_context(ctx, q.context());
        const auto parts = homogeneous_parts(q);
        const DeficitReport dq = deficit2(q);
        const Poly2 pq = compose_uni_bi(p, q);
        const DeficitReport dpq = deficit2(pq);
        b.witness("q", dq);
        b.witness("p(q)", dpq);
        bool positive_part_outside = false;
        for (const auto& part : parts) positive_part_outside |= part.degree >= 1 && !part.in_f;
        b.hypothesis("p nonconstant", p_nonconstant);
        b.hypothesis("a_n in F", an_in_f);
        b.hypothesis("q not in F[x,y]", !dq.in_f);
        b.hypothesis("q_m in F[x,y]", parts.back().in_f);
        b.hypothesis("some q_j not in F[x,y], j >= 1", positive_part_outside);
        b.conclusion("p(q) not in F[x,y]", !dpq.in_f);
        b.conclusion("D(p(q)) = D(q)", dpq.deficit == dq.deficit);
        std::vector<std::size_t> offending;
        for (const auto& part : homogeneous_parts(pq))
            if (!part.in_f) offending.push_back(part.degree);
        b.offending(std::move(offending));
        return b.finish();
    }

    if (is_iterate_theorem(id)) {
        const Poly1 pr = iterate(p, in.r);
        const DeficitReport dpr = deficit1(pr);
        b.witness("p^[r]", dpr);
        b.offending(non_f_indices(pr));
        switch (id) {
            case TheoremId::T4:
                b.hypothesis("p not in F[x]", !dp.in_f);
                b.hypothesis("a_n in F", an_in_f);
                b.conclusion("p^[r] not in F[x]", !dpr.in_f);
                b.conclusion("D(p^[r]) = D(p)", dpr.deficit == dp.deficit);
                break;
            case TheoremId::IterIneq: b.conclusion("D(p^[r]) >= D(p)", dpr.deficit >= dp.deficit); break;
            default:
                b.hypothesis("a_n in F", an_in_f);
                b.hypothesis("p^[r] in F[x]", dpr.in_f);
                b.conclusion("p in F[x]", dp.in_f);
                break;
        }
        return b.finish();
    }

    const Poly1& q = *in.q;
    require_context(ctx, q.context());
    const DeficitReport dq = deficit1(q);
    const Poly1 pq = compose(p, q);
    const DeficitReport dpq = deficit1(pq);
    b.witness("q", dq);
    b.witness("p(q)", dpq);
    b.offending(non_f_indices(pq));
    const bool bm_in_f = is_in_subfield(q.leading());
    const bool b0_in_f = is_in_subfield(q.constant_term());
    const bool positive_outside = some_non_f_at_positive_index(q);

    switch (id) {
        case TheoremId::T1:
        case TheoremId::C1:
        case TheoremId::Ring:
        case TheoremId::FF:
        case TheoremId::DeficitSetT1:
            b.hypothesis("p nonconstant", p_nonconstant);
            b.hypothesis("a_n in F", an_in_f);
            b.hypothesis("b_m in F", bm_in_f);
            if (id == TheoremId::C1) b.hypothesis("b_0 in F", b0_in_f);
            b.hypothesis("q not in F[x]", !dq.in_f);
            if (id != TheoremId::C1) b.hypothesis("some b_j not in F, j >= 1", positive_outside);
            if (id == TheoremId::FF)
                b.hypothesis("characteristic does not divide deg p", dp.degree % ctx->characteristic() != 0);
            if (id == TheoremId::Ring) {
                b.conclusion("D(p(q)) >= D(q)", dpq.deficit >= dq.deficit);
            } else {
                b.conclusion("p(q) not in F[x]", !dpq.in_f);
                b.conclusion("D(p(q)) = D(q)", dpq.deficit == dq.deficit);
            }
            break;
        case TheoremId::T1A:
            b.hypothesis("q in F[x]", dq.in_f);
            b.conclusion("D(p(q)) = D(p)*D(q)", dpq.deficit == dp.deficit * dq.deficit);
            break;
        case TheoremId::T2:
            b.hypothesis("p nonconstant", p_nonconstant);
            b.hypothesis("a_n*b_m in F", is_in_subfield(p.leading() * q.leading()));
            b.conclusion("D(p(q)) >= D(q)", dpq.deficit >= dq.deficit);
            break;
        case TheoremId::P1:
            b.hypothesis("p nonconstant", p_nonconstant);
            b.hypothesis("b_m in F", bm_in_f);
            b.hypothesis("some b_j not in F, j >= 1", positive_outside);
            b.conclusion("p(q) not in F[x]", !dpq.in_f);
            break;
        case TheoremId::L1:
            b.hypothesis("q in F[x]", dq.in_f);
            b.hypothesis("q nonconstant", dq.degree >= 1);
            b.hypothesis("p(q) in F[x]", dpq.in_f);
            b.conclusion("p in F[x]", dp.in_f);
            break;
        case TheoremId::T3:
            b.hypothesis("p(q) in F[x]", dpq.in_f);
            b.hypothesis("b_0 in F", b0_in_f);
            b.hypothesis("b_m in F", bm_in_f);
            b.conclusion("p in F[x] or q in F[x]", dp.in_f || dq.in_f);
            if (dpq.degree >= 1) b.conclusion("p in F[x] and q in F[x]", dp.in_f && dq.in_f);
            break;
        default: break;
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

// Calls visit(i_0, ..., i_{m}) for every tuple of nonnegative integers summing to k,
// skipping tuples that use a zero base.
void for_each_composition(std::size_t slots, std::size_t k, const std::vector<bool>& usable,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(slots, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t left) {
        if (slot + 1 == slots) {
            if (left > 0 && !usable[slot]) return;
            idx[slot] = left;
            visit(idx);
            idx[slot] = 0;
            return;
        }
        const std::size_t max_here = usable[slot] ? left : 0;
        for (std::size_t i = 0; i <= max_here; ++i) {
            idx[slot] = i;
            rec(slot + 1, left - i);
        }
        idx[slot] = 0;
    };
    if (slots == 0) return;
    rec(0, k);
}

mpz_class factorial(std::size_t n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// powers[j][i] = base_j^i for i ≤ k_max
std::vector<std::vector<Element>> power_table(const std::vector<Element>& bases, std::size_t k_max) {
    std::vector<std::vector<Element>> table;
    for (const Element& base : bases) {
        std::vector<Element> row{Element::one(base.context())};
        for (std::size_t i = 1; i <= k_max; ++i) row.push_back(row.back() * base);
        table.push_back(std::move(row));
    }
    return table;
}

// a_k · multinomial(k; i) · Π base_j^{i_j}
Element multinomial_term(const ContextPtr& ctx, const Element& a_k, std::size_t k,
                         const std::vector<std::size_t>& idx, const std::vector<std::vector<Element>>& powers) {
    mpz_class coefficient = factorial(k);
    for (std::size_t i : idx) coefficient /= factorial(i);
    Element term = a_k * Element::integer(ctx, coefficient);
    for (std::size_t j = 0; j < idx.size(); ++j)
        if (idx[j] != 0) term *= powers[j][idx[j]];
    return term;
}

}  // namespace

Poly1 compose_oracle(const Poly1& p, const Poly1& q, std::size_t max_coefficients) {
    require_context(p.context(), q.context());
    const ContextPtr& ctx = p.context();
    if (p.is_zero()) return Poly1(ctx);
    const std::size_t n = p.degree();
    if (q.is_zero()) return Poly1::constant(p.constant_term());
    const std::size_t m = q.degree();
    if (composed_size(n, m) > max_coefficients)
        throw Error(ErrorCode::DegreeOverflow, "composition exceeds " + std::to_string(max_coefficients) + " coefficients");

    const auto& a = p.coefficients();
    const auto& b = q.coefficients();
    std::vector<bool> usable(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) usable[j] = !b[j].is_zero();
    const auto powers = power_table(b, n);

    std::vector<Element> out(n * m + 1, Element::zero(ctx));
    for (std::size_t k = 0; k <= n; ++k) {
        if (a[k].is_zero()) continue;
        if (k == 0) {
            out[0] += a[0];
            continue;
        }
        for_each_composition(b.size(), k, usable, [&](const std::vector<std::size_t>& idx) {
            std::size_t exponent = 0;
            for (std::size_t j = 0; j < idx.size(); ++j) exponent += j * idx[j];
            out[exponent] += multinomial_term(ctx, a[k], k, idx, powers);
        });
    }
    return Poly1(ctx, std::move(out));
}

Poly2 compose_oracle2(const Poly1& p, const Poly2& q, std::size_t max_coefficients) {
    require_context(p.context(), q.context());
    const ContextPtr& ctx = p.context();
    if (p.is_zero()) return Poly2(ctx);
    const std::size_t n = p.degree();
    if (q.is_zero()) return Poly2::constant(p.constant_term());
    const std::size_t m = q.total_degree();
    if (composed_size(n, m) > max_coefficients)
        throw Error(ErrorCode::DegreeOverflow, "composition exceeds " + std::to_string(max_coefficients) + " coefficients");

    const auto terms = q.monomials();
    std::vector<Element> bases;
    for (const auto& t : terms) bases.push_back(t.coefficient);
    const std::vector<bool> usable(terms.size(), true);
    const auto powers = power_table(bases, n);

    std::map<std::pair<std::size_t, std::size_t>, Element> acc;
    const auto& a = p.coefficients();
    acc.emplace(std::make_pair(0, 0), a[0]);
    for (std::size_t k = 1; k <= n; ++k) {
        if (a[k].is_zero()) continue;
        for_each_composition(terms.size(), k, usable, [&](const std::vector<std::size_t>& idx) {
            std::size_t ex = 0, ey = 0;
            for (std::size_t j = 0; j < idx.size(); ++j) {
                ex += terms[j].x_exponent * idx[j];
                ey += terms[j].y_exponent * idx[j];
            }
            const Element term = multinomial_term(ctx, a[k], k, idx, powers);
            auto it = acc.find({ex, ey});
            if (it == acc.end())
                acc.emplace(std::make_pair(ex, ey), term);
            else
                it->second += term;
        });
    }
    std::vector<Poly2::Monomial> out;
    for (auto& [key, c] : acc) out.push_back({key.first, key.second, c});
    return Poly2::from_terms(ctx, out);
}

// ---------------------------------------------------------------------------
// Generators

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// rng() % n keeps sequences identical across standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

template <class T>
const T& pick_from(std::mt19937_64& rng, const std::vector<T>& items) {
    return items[pick(rng, items.size())];
}

void add_unique(std::vector<Element>& pool, Element e) {
    if (std::find(pool.begin(), pool.end(), e) == pool.end()) pool.push_back(std::move(e));
}

struct Pools {
    std::vector<Element> all, f, non_f, f_nonzero, non_f_nonzero, nonzero;

    explicit Pools(const std::vector<Element>& pool) : all(pool) {
        for (const Element& e : pool) {
            const bool member = is_in_subfield(e);
            (member ? f : non_f).push_back(e);
            if (!e.is_zero()) {
                (member ? f_nonzero : non_f_nonzero).push_back(e);
                nonzero.push_back(e);
            }
        }
    }

    const std::vector<Element>& for_membership(Membership m, bool nonzero_only) const {
        switch (m) {
            case Membership::InF: return nonzero_only ? f_nonzero : f;
            case Membership::NotInF: return nonzero_only ? non_f_nonzero : non_f;
            case Membership::Any: break;
        }
        return nonzero_only ? nonzero : all;
    }
};

[[noreturn]] void unsatisfiable(const std::string& why) { throw Error(ErrorCode::UnsatisfiableConstraints, why); }

bool degree_feasible(std::size_t deg, const GenConstraints& c, const Pools& pools) {
    if (c.degree_not_divisible_by && deg % *c.degree_not_divisible_by == 0) return false;
    if (c.degree_divisible_by && deg % *c.degree_divisible_by != 0) return false;
    const Membership lead = c.all_in_f ? Membership::InF : c.leading;
    const Membership cons = c.all_in_f ? Membership::InF : c.constant;
    if (pools.for_membership(lead, true).empty()) return false;
    if (deg == 0) {
        if (lead != Membership::Any && cons != Membership::Any && lead != cons) return false;
        if (cons != Membership::Any && pools.for_membership(cons, true).empty()) return false;
    } else if (pools.for_membership(cons, false).empty()) {
        return false;
    }
    if (c.all_in_f) return !c.non_f_anywhere && !c.non_f_at_positive_index;
    if (c.non_f_at_positive_index || c.non_f_anywhere) {
        if (pools.non_f_nonzero.empty()) return false;
    }
    if (c.non_f_at_positive_index) {
        const bool middle = deg >= 2;
        const bool top = deg >= 1 && lead != Membership::InF;
        if (!middle && !top) return false;
    }
    if (c.non_f_anywhere) {
        const bool middle = deg >= 2;
        const bool top = lead != Membership::InF && (deg >= 1 || cons != Membership::InF);
        const bool bottom = deg >= 1 && cons != Membership::InF;
        if (!middle && !top && !bottom) return false;
    }
    return true;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t suite_seed, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(suite_seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

std::vector<Element> default_pool(const ContextPtr& ctx) {
    std::vector<Element> pool;
    for (long v : {0L, 1L, -1L, 2L, -2L}) add_unique(pool, Element::integer(ctx, v));
    if (!(ctx->representation() == Representation::Residue && ctx->prime() == 2))
        add_unique(pool, Element::rational(ctx, mpq_class(1, 2)));
    switch (ctx->representation()) {
        case Representation::Rational:
            if (ctx->kind() == ContextKind::RingZInQ) {
                add_unique(pool, Element::integer(ctx, 3));
                for (auto [n, d] : {std::pair{2, 3}, {3, 2}, {-1, 3}}) add_unique(pool, Element::rational(ctx, mpq_class(n, d)));
            }
            break;
        case Representation::Quadratic:
            for (std::size_t mask = 1; mask < ctx->basis_size(); ++mask) {
                std::vector<mpq_class> coords(ctx->basis_size(), mpq_class(0));
                coords[mask] = 1;
                const Element basis = Element::from_coordinates(ctx, coords);
                add_unique(pool, basis);
                add_unique(pool, basis + Element::one(ctx));
                add_unique(pool, basis * Element::integer(ctx, 2) - Element::one(ctx));
                if (mask == 1) add_unique(pool, -basis);
            }
            break;
        case Representation::TPoly: {
            const Element t = Element::transcendental(ctx);
            for (const Element& e : {t, -t, t + Element::one(ctx), t * Element::integer(ctx, 2), t * t,
                                     t - Element::rational(ctx, mpq_class(1, 2))})
                add_unique(pool, e);
            break;
        }
        case Representation::Residue: {
            const Element g = Element::generator(ctx);
            for (const Element& e : {g, g + Element::one(ctx), g * Element::integer(ctx, 2), g * g,
                                     g * g + g, g.pow(3)})
                add_unique(pool, e);
            break;
        }
    }
    return pool;
}

Poly1 random_poly(const ContextPtr& ctx, const GenConstraints& c) {
    if (c.min_degree > c.max_degree) unsatisfiable("empty degree range");
    const Pools pools(c.pool.empty() ? default_pool(ctx) : c.pool);
    if (pools.nonzero.empty()) unsatisfiable("coefficient pool has no nonzero element");
    for (const Element& e : pools.all) require_context(ctx, e.context());

    std::vector<std::size_t> degrees;
    for (std::size_t d = c.min_degree; d <= c.max_degree; ++d)
        if (degree_feasible(d, c, pools)) degrees.push_back(d);
    if (degrees.empty()) unsatisfiable("no degree in range satisfies the constraints over " + ctx->name());

    std::mt19937_64 rng(c.seed);
    const std::size_t deg = pick_from(rng, degrees);
    const Membership lead = c.all_in_f ? Membership::InF : c.leading;
    const Membership cons = c.all_in_f ? Membership::InF : c.constant;
    const Membership middle = c.all_in_f ? Membership::InF : Membership::Any;

    std::vector<Element> coeffs;
    for (std::size_t k = 0; k <= deg; ++k) {
        if (k == deg) {
            const auto& src = (deg == 0 && cons != Membership::Any) ? pools.for_membership(cons, true)
                                                                    : pools.for_membership(lead, true);
            coeffs.push_back(pick_from(rng, src));
        } else if (k == 0) {
            coeffs.push_back(pick_from(rng, pools.for_membership(cons, false)));
        } else {
            coeffs.push_back(pick_from(rng, pools.for_membership(middle, false)));
        }
    }

    auto force_outside = [&](const std::vector<std::size_t>& slots) {
        const std::size_t at = pick_from(rng, slots);
        coeffs[at] = pick_from(rng, pools.non_f_nonzero);
    };
    auto has_outside = [&](std::size_t from) {
        for (std::size_t k = from; k <= deg; ++k)
            if (!is_in_subfield(coeffs[k])) return true;
        return false;
    };
    if (c.non_f_at_positive_index && !has_outside(1)) {
        std::vector<std::size_t> slots;
        for (std::size_t k = 1; k < deg; ++k) slots.push_back(k);
        if (deg >= 1 && lead != Membership::InF) slots.push_back(deg);
        force_outside(slots);
    }
    if (c.non_f_anywhere && !has_outside(0)) {
        std::vector<std::size_t> slots;
        for (std::size_t k = 1; k < deg; ++k) slots.push_back(k);
        if (lead != Membership::InF && (deg >= 1 || cons != Membership::InF)) slots.push_back(deg);
        if (deg >= 1 && cons != Membership::InF) slots.push_back(0);
        force_outside(slots);
    }
    return Poly1(ctx, std::move(coeffs));
}

Poly2 random_poly2(const ContextPtr& ctx, const GenConstraints2& c) {
    if (c.min_degree > c.max_degree) unsatisfiable("empty degree range");
    const Pools pools(c.pool.empty() ? default_pool(ctx) : c.pool);
    std::size_t lo = c.min_degree;
    if (c.non_f_part_at_positive_degree) {
        if (pools.non_f_nonzero.empty()) unsatisfiable("pool has no element outside F");
        lo = std::max<std::size_t>(lo, c.top_part_in_f ? 2 : 1);
    }
    if (c.top_part_in_f && pools.f_nonzero.empty()) unsatisfiable("pool has no nonzero element of F");
    if (pools.nonzero.empty()) unsatisfiable("coefficient pool has no nonzero element");
    if (lo > c.max_degree) unsatisfiable("no degree in range satisfies the constraints");

    std::mt19937_64 rng(c.seed);
    const std::size_t m = lo + pick(rng, c.max_degree - lo + 1);
    std::vector<Poly2::Monomial> terms;
    for (std::size_t k = 0; k <= m; ++k) {
        const bool top = k == m;
        const auto& src = top && c.top_part_in_f ? pools.f : pools.all;
        for (std::size_t ex = 0; ex <= k; ++ex)
            if (pick(rng, 2) == 0) terms.push_back({ex, k - ex, pick_from(rng, src)});
        if (top) {
            const auto& nz = c.top_part_in_f ? pools.f_nonzero : pools.nonzero;
            const std::size_t ex = pick(rng, m + 1);
            terms.push_back({ex, m - ex, pick_from(rng, nz)});
        }
    }
    Poly2 q = Poly2::from_terms(ctx, terms);
    // Summing duplicate monomials can cancel the top part.
    while (q.is_zero() || q.total_degree() != m || (c.top_part_in_f && !homogeneous_parts(q).back().in_f)) {
        const auto& nz = c.top_part_in_f ? pools.f_nonzero : pools.nonzero;
        const std::size_t ex = pick(rng, m + 1);
        q += Poly2::from_terms(ctx, {{ex, m - ex, pick_from(rng, nz)}});
    }
    if (c.non_f_part_at_positive_degree) {
        bool found = false;
        for (const auto& part : homogeneous_parts(q)) found |= part.degree >= 1 && !part.in_f;
        const std::size_t hi = c.top_part_in_f ? m - 1 : m;
        while (!found) {
            const std::size_t k = 1 + pick(rng, hi);
            const std::size_t ex = pick(rng, k + 1);
            q += Poly2::from_terms(ctx, {{ex, k - ex, pick_from(rng, pools.non_f_nonzero)}});
            for (const auto& part : homogeneous_parts(q)) found |= part.degree >= 1 && part.degree <= hi && !part.in_f;
            if (q.is_zero() || q.total_degree() != m) found = false;
        }
    }
    return q;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct TrialInputs {
    TheoremInputs inputs;
};

Poly1 with_leading(const Poly1& p, const Element& lead) {
    std::vector<Element> coeffs = p.coefficients();
    coeffs.back() = lead;
    return Poly1(p.context(), std::move(coeffs));
}

std::size_t iterate_degree_cap(const SuiteCaps& caps, unsigned r) {
    std::size_t best = 1;
    for (std::size_t d = 1; d <= caps.max_degree; ++d) {
        std::size_t size = 1;
        bool ok = true;
        for (unsigned i = 0; i < r; ++i) {
            size *= d;
            if (size > caps.max_iterate_degree) ok = false;
        }
        if (ok) best = d;
    }
    return best;
}

GenConstraints gen(std::size_t lo, std::size_t hi, std::uint64_t seed) {
    GenConstraints c;
    c.min_degree = lo;
    c.max_degree = hi;
    c.seed = seed;
    return c;
}

TheoremInputs make_trial(TheoremId id, const ContextPtr& ctx, const SuiteCaps& caps, SuiteMode mode,
                         std::size_t index, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto s1 = rng();
    const auto s2 = rng();
    const std::size_t D = caps.max_degree;
    TheoremInputs in;

    auto t1_shaped_q = [&](std::uint64_t s) {
        GenConstraints c = gen(1, D, s);
        c.leading = Membership::InF;
        c.non_f_at_positive_index = true;
        return random_poly(ctx, c);
    };

    switch (id) {
        case TheoremId::T1:
        case TheoremId::Ring:
        case TheoremId::FF:
        case TheoremId::DeficitSetT1: {
            GenConstraints cp = gen(1, D, s1);
            cp.leading = Membership::InF;
            if (id == TheoremId::FF) {
                if (mode == SuiteMode::NegativeControl)
                    cp.degree_divisible_by = ctx->characteristic();
                else
                    cp.degree_not_divisible_by = ctx->characteristic();
            }
            in.p = random_poly(ctx, cp);
            in.q = t1_shaped_q(s2);
            break;
        }
        case TheoremId::C1: {
            GenConstraints cp = gen(1, D, s1);
            cp.leading = Membership::InF;
            in.p = random_poly(ctx, cp);
            GenConstraints cq = gen(1, D, s2);
            cq.leading = Membership::InF;
            cq.constant = Membership::InF;
            cq.non_f_anywhere = true;
            in.q = random_poly(ctx, cq);
            break;
        }
        case TheoremId::T1A: {
            in.p = random_poly(ctx, gen(0, D, s1));
            GenConstraints cq = gen(1, D, s2);
            cq.all_in_f = true;
            in.q = random_poly(ctx, cq);
            break;
        }
        case TheoremId::T2: {
            if (mode == SuiteMode::NegativeControl) {
                GenConstraints cp = gen(1, D, s1);
                cp.leading = Membership::NotInF;
                in.p = random_poly(ctx, cp);
                in.q = t1_shaped_q(s2);
                break;
            }
            Poly1 q = random_poly(ctx, gen(1, D, s2));
            Element inv = Element::one(ctx);
            try {
                inv = q.leading().inverse();
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NotInvertible) throw;
                GenConstraints cq = gen(1, D, s2);
                cq.leading = Membership::InF;
                q = random_poly(ctx, cq);
                inv = q.leading().inverse();
            }
            const Poly1 p = random_poly(ctx, gen(1, D, s1));
            const Pools pools(default_pool(ctx));
            in.p = with_leading(p, pick_from(rng, pools.f_nonzero) * inv);
            in.q = q;
            break;
        }
        case TheoremId::P1: {
            in.p = random_poly(ctx, gen(1, D, s1));
            in.q = t1_shaped_q(s2);
            break;
        }
        case TheoremId::L1: {
            GenConstraints cq = gen(1, D, s2);
            cq.all_in_f = true;
            in.q = random_poly(ctx, cq);
            GenConstraints cp = gen(0, D, s1);
            cp.all_in_f = index % 2 == 0;
            in.p = random_poly(ctx, cp);
            break;
        }
        case TheoremId::T3: {
            // p∘q ∈ F[x] is rare at random, so two thirds of the trials build it in.
            // A constant q could make p∘q vanish, which has no deficit.
            GenConstraints cq = gen(1, D, s2);
            cq.leading = Membership::InF;
            cq.constant = Membership::InF;
            cq.all_in_f = index % 3 == 0;
            in.q = random_poly(ctx, cq);
            GenConstraints cp = index % 3 == 1 ? gen(0, 0, s1) : gen(0, D, s1);
            cp.all_in_f = index % 3 != 2;
            in.p = random_poly(ctx, cp);
            break;
        }
        case TheoremId::T4:
        case TheoremId::IterIneq:
        case TheoremId::T5: {
            in.r = 1 + static_cast<unsigned>(pick(rng, caps.max_r));
            GenConstraints cp = gen(0, iterate_degree_cap(caps, in.r), s1);
            if (id == TheoremId::T4) {
                cp.leading = Membership::InF;
                cp.non_f_anywhere = true;
            } else if (id == TheoremId::T5) {
                cp.leading = Membership::InF;
                cp.all_in_f = index % 2 == 0;
            }
            in.p = random_poly(ctx, cp);
            break;
        }
        case TheoremId::TwoVar: {
            GenConstraints cp = gen(1, caps.max_degree_bivariate, s1);
            cp.leading = Membership::InF;
            in.p = random_poly(ctx, cp);
            GenConstraints2 cq;
            cq.min_degree = 1;
            cq.max_degree = caps.max_degree_bivariate;
            cq.top_part_in_f = true;
            cq.non_f_part_at_positive_degree = true;
            cq.seed = s2;
            in.q2 = random_poly2(ctx, cq);
            break;
        }
    }
    return in;
}

CounterexampleRecord make_record(std::uint64_t seed, std::size_t index, const TheoremInputs& in,
                                 const TheoremVerdict& verdict) {
    CounterexampleRecord rec;
    rec.seed = seed;
    rec.trial = index;
    rec.p = format_poly(*in.p);
    if (in.q) rec.q = format_poly(*in.q);
    if (in.q2) rec.q = format_poly(*in.q2);
    rec.r = in.r;
    rec.verdict = verdict;
    return rec;
}

}  // namespace

SuiteReport run_suite(TheoremId id, const ContextPtr& ctx, std::size_t trials, std::uint64_t seed, SuiteCaps caps,
                      SuiteMode mode) {
    if (!admissible(id, *ctx))
        throw Error(ErrorCode::InadmissibleContext,
                    std::string(to_string(id)) + " cannot be checked over " + ctx->name());
    if (mode == SuiteMode::NegativeControl && id != TheoremId::FF && id != TheoremId::T2)
        throw Error(ErrorCode::InadmissibleContext, "negative control exists only for FF and T2");

    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.theorem = id;
    report.context = ctx->name();
    report.mode = mode;
    report.empirical = mode == SuiteMode::NegativeControl || id == TheoremId::DeficitSetT1;
    report.trials = trials;
    report.seed = seed;
    report.caps = caps;

    for (std::size_t i = 0; i < trials; ++i) {
        const TheoremInputs in = make_trial(id, ctx, caps, mode, i, trial_seed(seed, i));
        const TheoremVerdict verdict = verify_theorem(id, in, ctx);
        ++report.trials_run;
        if (!verdict.conclusion_holds) {
            ++report.conclusion_failures;
            if (!report.first_conclusion_failure)
                report.first_conclusion_failure = make_record(seed, i, in, verdict);
        }
        switch (verdict.classification) {
            case Classification::Confirms: ++report.confirms; break;
            case Classification::Vacuous: ++report.vacuous; break;
            case Classification::CounterexampleToConclusion:
                if (report.counterexamples.size() < kMaxRecordedCounterexamples)
                    report.counterexamples.push_back(make_record(seed, i, in, verdict));
                if (!report.empirical) report.aborted = true;
                break;
        }
        if (report.aborted) break;
    }
    report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<ContextPtr> default_suite_contexts(TheoremId id) {
    switch (id) {
        case TheoremId::Ring: return {make_context("Z<Q")};
        case TheoremId::FF: return {make_context("GF(3^2)"), make_context("GF(5^2)")};
        case TheoremId::DeficitSetT1: return {make_context("set:realsUnionImag")};
        case TheoremId::TwoVar: return {make_context("Q(sqrt 2)"), make_context("Q(sqrt -1)")};
        default: return {make_context("Q(sqrt 2, sqrt 3)"), make_context("Q(sqrt -1)"), make_context("Q[t]")};
    }
}

}  // namespace deficitlab
