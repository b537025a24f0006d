#include <chrono>
#include <functional>
#include <sstream>

#include "deficitlab/parser.hpp"
#include "deficitlab/theorems.hpp"

namespace deficitlab {

// ---------------------------------------------------------------------------
// Decomposition obstruction

namespace {

bool some_non_f_at_positive_index(const Poly1& q) {
    for (std::size_t j = 1; j < q.coefficients().size(); ++j)
        if (!is_in_subfield(q.coefficients()[j])) return true;
    return false;
}

std::string deficit_text(const char* name, const DeficitReport& d) {
    return std::string("D(") + name + ") = " + std::to_string(d.deficit) + (d.in_f ? " (in F[x])" : "");
}

}  // namespace

ObstructionVerdict decomposition_obstruction(const Poly1& r, const Poly1& q) {
    if (!r.context()->same_as(*q.context()))
        throw Error(ErrorCode::ContextMismatch, r.context()->name() + " vs " + q.context()->name());
    const std::size_t m = q.degree();
    const std::size_t total = r.degree();
    if (m < 2) throw Error(ErrorCode::DegreeIncompatible, "deg q must be at least 2");
    if (total < m || total % m != 0)
        throw Error(ErrorCode::DegreeIncompatible,
                    "deg q = " + std::to_string(m) + " does not divide deg r = " + std::to_string(total));
    const std::size_t n = total / m;
    const FieldContext& ctx = *r.context();

    // r = p∘q forces a_n·b_m^n = lead(r).
    std::optional<Element> an;
    try {
        an = r.leading() / q.leading().pow(n);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotInvertible) throw;
        return {true, "lead(r) is not a multiple of b_m^" + std::to_string(n) + " in " + ctx.name()};
    }

    const DeficitReport dr = deficit1(r);
    const DeficitReport dq = deficit1(q);
    const bool an_in_f = is_in_subfield(*an);
    const bool bm_in_f = is_in_subfield(q.leading());
    const bool t1_shape = an_in_f && bm_in_f && !dq.in_f && some_non_f_at_positive_index(q);
    const std::string deficits = deficit_text("r", dr) + ", " + deficit_text("q", dq);

    if (ctx.kind() == ContextKind::RingZInQ) {
        if (t1_shape && dr.deficit < dq.deficit)
            return {true, "forced a_n = " + an->to_string() + " and b_m lie in F, so D(r) >= D(q); " + deficits};
        return {false, {}};
    }
    if (ctx.kind() == ContextKind::FiniteField) {
        if (t1_shape && n % ctx.characteristic() != 0 && (dr.in_f || dr.deficit != dq.deficit))
            return {true, "forced a_n = " + an->to_string() + " and b_m lie in F with t not dividing " +
                              std::to_string(n) + ", so D(r) = D(q); " + deficits};
        return {false, {}};
    }
    if (!ctx.f_is_field() || ctx.characteristic() != 0) return {false, {}};

    if (t1_shape && (dr.in_f || dr.deficit != dq.deficit))
        return {true, "forced a_n = " + an->to_string() + " and b_m lie in F, so r is outside F[x] and D(r) = D(q); " +
                          deficits};
    if (bm_in_f && some_non_f_at_positive_index(q) && dr.in_f)
        return {true, "b_m lies in F and q has a coefficient outside F at a positive index, so r cannot lie in F[x]"};
    if (is_in_subfield(*an * q.leading()) && dr.deficit < dq.deficit)
        return {true, "forced a_n*b_m lies in F, so D(r) >= D(q); " + deficits};
    if (dq.in_f && dr.deficit % dq.deficit != 0)
        return {true, "q lies in F[x], so D(q) divides D(r); " + deficits};
    return {false, {}};
}

// ---------------------------------------------------------------------------
// Worked examples

namespace {

class Replay {
public:
    void run(const std::string& name, const std::function<std::string()>& body) {
        FixtureResult result;
        result.name = name;
        try {
            result.detail = body();
            result.passed = true;
        } catch (const std::exception& e) {
            result.detail = e.what();
        }
        report_.fixtures.push_back(std::move(result));
    }

    FixtureReport take() { return std::move(report_); }

private:
    FixtureReport report_;
};

struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class A, class B>
void expect_eq(const std::string& what, const A& actual, const B& expected) {
    if (!(actual == expected)) {
        std::ostringstream out;
        out << what << ": got " << actual << ", expected " << expected;
        throw Mismatch(out.str());
    }
}

void expect(const std::string& what, bool holds) {
    if (!holds) throw Mismatch(what);
}

void expect_poly(const std::string& what, const Poly1& actual, const Poly1& expected) {
    if (!(actual == expected)) throw Mismatch(what + ": got " + format_poly(actual) + ", expected " + format_poly(expected));
}

void expect_poly(const std::string& what, const Poly2& actual, const Poly2& expected) {
    if (!(actual == expected)) throw Mismatch(what + ": got " + format_poly(actual) + ", expected " + format_poly(expected));
}

void expect_class(const TheoremVerdict& v, Classification c) {
    if (v.classification != c)
        throw Mismatch(std::string(to_string(v.id)) + " classified " + std::string(to_string(v.classification)) +
                       ", expected " + std::string(to_string(c)) +
                       (v.failed_hypothesis().empty() ? "" : " (failed: " + v.failed_hypothesis() + ")"));
}

std::size_t witness_deficit(const TheoremVerdict& v, std::string_view label) {
    const DeficitReport* w = v.witness(label);
    if (!w) throw Mismatch("missing witness " + std::string(label));
    return w->deficit;
}

TheoremInputs pair(const Poly1& p, const Poly1& q) {
    TheoremInputs in;
    in.p = p;
    in.q = q;
    return in;
}

TheoremInputs iterated(const Poly1& p, unsigned r) {
    TheoremInputs in;
    in.p = p;
    in.r = r;
    return in;
}

}  // namespace

bool FixtureReport::all_passed() const noexcept {
    for (const auto& f : fixtures)
        if (!f.passed) return false;
    return !fixtures.empty();
}

FixtureReport worked_examples() {
    const auto start = std::chrono::steady_clock::now();
    Replay replay;

    replay.run("deficit of a quintic over Q(sqrt 3)", [] {
        const auto ctx = make_context("Q(sqrt 3)");
        const DeficitReport d = deficit1(parse_poly1("x^5 - 5*x^3 + sqrt(3)*x^2 - x + 1", ctx));
        expect_eq("deficit", d.deficit, 3u);
        return std::string("D = 3");
    });

    replay.run("composition with two radicals", [] {
        const auto ctx = make_context("Q(sqrt 2, sqrt 3)");
        const Poly1 p = parse_poly1("x^3 + 2*x^2 - sqrt(2)*x + 1", ctx);
        const Poly1 q = parse_poly1("x^2 + sqrt(3)*x + 5", ctx);
        const Poly1 expected = parse_poly1(
            "x^6 + 3*sqrt(3)*x^5 + 26*x^4 + 37*sqrt(3)*x^3 + (146 - sqrt(2))*x^2"
            " + (95*sqrt(3) - sqrt(2)*sqrt(3))*x + 176 - 5*sqrt(2)",
            ctx);
        expect_poly("p(q)", compose(p, q), expected);
        expect_poly("oracle p(q)", compose_oracle(p, q), expected);
        const TheoremVerdict v = verify_theorem(TheoremId::T1, pair(p, q), ctx);
        expect_class(v, Classification::Confirms);
        expect_eq("D(p(q))", witness_deficit(v, "p(q)"), 1u);
        expect_eq("D(q)", witness_deficit(v, "q"), 1u);
        return std::string("D(p(q)) = 1 = D(q)");
    });

    replay.run("product rule with q in F[x]", [] {
        const auto ctx = make_context("Q(sqrt 2)");
        const Poly1 p = parse_poly1("x^4 - sqrt(2)*x", ctx);
        const Poly1 q = parse_poly1("x^2 + 3*x", ctx);
        expect_poly("p(q)", compose(p, q),
                    parse_poly1("x^8 + 12*x^7 + 54*x^6 + 108*x^5 + 81*x^4 - sqrt(2)*x^2 - 3*sqrt(2)*x", ctx));
        const TheoremVerdict v = verify_theorem(TheoremId::T1A, pair(p, q), ctx);
        expect_class(v, Classification::Confirms);
        expect_eq("D(p(q))", witness_deficit(v, "p(q)"), 6u);
        expect_eq("D(p)", witness_deficit(v, "p"), 3u);
        expect_eq("D(q)", witness_deficit(v, "q"), 2u);
        return std::string("D(p(q)) = 6 = 3*2");
    });

    replay.run("equality fails with a_n, b_m outside F", [] {
        const auto ctx = make_context("Q(sqrt 2, sqrt 3, sqrt 5)");
        const Poly1 p = parse_poly1("sqrt(2)*x^3 + x^2 - x + sqrt(5)", ctx);
        const Poly1 q = parse_poly1("3*sqrt(2)*x^2 + sqrt(3)*x + 5", ctx);
        const TheoremVerdict v = verify_theorem(TheoremId::T1, pair(p, q), ctx);
        expect_class(v, Classification::Vacuous);
        expect_eq("D(p(q))", witness_deficit(v, "p(q)"), 1u);
        expect_eq("D(q)", witness_deficit(v, "q"), 0u);
        return std::string("D(p(q)) = 1, D(q) = 0");
    });

    replay.run("inequality fails with a_n*b_m outside F", [] {
        const auto ctx = make_context("Q(sqrt 2, sqrt 3)");
        const Poly1 p = parse_poly1("sqrt(2)*x^3 + x^2 - x + 1", ctx);
        const Poly1 q = parse_poly1("x^2 + sqrt(3)*x + 5", ctx);
        const TheoremVerdict v = verify_theorem(TheoremId::T2, pair(p, q), ctx);
        expect_class(v, Classification::Vacuous);
        expect("conclusion fails", !v.conclusion_holds);
        expect_eq("D(p(q))", witness_deficit(v, "p(q)"), 0u);
        expect_eq("D(q)", witness_deficit(v, "q"), 1u);
        return std::string("D(p(q)) = 0 < 1 = D(q)");
    });

    replay.run("membership needs b_0 and b_m in F", [] {
        const auto ctx = make_context("Q(sqrt 2)");
        for (auto [ps, qs] : {std::pair{"x - sqrt(2)", "x + sqrt(2)"}, {"1/2*sqrt(2)*x", "sqrt(2)*x"}}) {
            const TheoremVerdict v = verify_theorem(TheoremId::T3, pair(parse_poly1(ps, ctx), parse_poly1(qs, ctx)), ctx);
            expect_class(v, Classification::Vacuous);
            expect(std::string("conclusion fails for p = ") + ps, !v.conclusion_holds);
            expect_eq("p(q)", format_poly(compose(parse_poly1(ps, ctx), parse_poly1(qs, ctx))), std::string("x"));
        }
        return std::string("p(q) = x in both cases");
    });

    replay.run("complement of Q is not closed", [] {
        const auto ctx = make_context("set:complementQ");
        const Poly1 p = parse_poly1("x^2", ctx);
        const Poly1 q = parse_poly1("t*x^2 + x + t", ctx);
        const Poly1 pq = compose(p, q);
        expect_poly("p(q)", pq, parse_poly1("t^2*x^4 + 2*t*x^3 + (2*t^2 + 1)*x^2 + 2*t*x + t^2", ctx));
        for (const Element& c : pq.coefficients()) expect("coefficient " + c.to_string() + " outside Q", is_in_subfield(c));
        expect("p has a coefficient in Q", !in_f(p));
        expect("q has a coefficient in Q", !in_f(q));
        return std::string("every coefficient of p(q) lies outside Q");
    });

    replay.run("second iterate over Q(i)", [] {
        const auto ctx = make_context("Q(sqrt -1)");
        const Poly1 p = parse_poly1("x^3 + 4*x^2 - 3*i*x + 2*i", ctx);
        expect_poly("p(p)", iterate(p, 2),
                    parse_poly1("x^9 + 12*x^8 + (48 - 9*i)*x^7 + (68 - 66*i)*x^6 + (5 - 96*i)*x^5"
                                " + (-8 + 72*i)*x^4 + (132 - 56*i)*x^3 + (-84 - 2*i)*x^2 + (39 + 36*i)*x - 10 - 6*i",
                                ctx));
        const TheoremVerdict v = verify_theorem(TheoremId::T4, iterated(p, 2), ctx);
        expect_class(v, Classification::Confirms);
        expect_eq("D(p(p))", witness_deficit(v, "p^[r]"), 2u);
        expect_eq("D(p)", witness_deficit(v, "p"), 2u);
        return std::string("D(p(p)) = 2 = D(p)");
    });

    replay.run("iterate membership needs a_n in F", [] {
        const auto i_ctx = make_context("Q(sqrt -1)");
        const auto r_ctx = make_context("Q(sqrt 2)");
        for (auto [ctx, text] : {std::pair{i_ctx, "i*x"}, {r_ctx, "sqrt(2)*x"}}) {
            const TheoremVerdict v = verify_theorem(TheoremId::T5, iterated(parse_poly1(text, ctx), 2), ctx);
            expect_class(v, Classification::Vacuous);
            expect(std::string("conclusion fails for ") + text, !v.conclusion_holds);
        }
        return std::string("p^[2] in F[x] while p is not");
    });

    replay.run("diagonal substitution collapses to a constant", [] {
        const auto ctx = make_context("Q(sqrt -1)");
        const Poly2 p = parse_poly2("x^2 - y^2 + 1", ctx);
        const Poly1 q = parse_poly1("x^2 + i*x", ctx);
        const Poly1 pqq = diag_subst_uni(p, q);
        expect_poly("p(q,q)", pqq, parse_poly1("1", ctx));
        expect_eq("D(p(q,q))", deficit1(pqq).deficit, 0u);
        expect_eq("D(q)", deficit1(q).deficit, 1u);
        return std::string("p(q,q) = 1, D = 0 < 1 = D(q)");
    });

    replay.run("diagonal self-substitution loses the deficit", [] {
        const auto ctx = make_context("Q(sqrt 3, sqrt 5)");
        const Poly2 p = parse_poly2("y^2 - x^2 + sqrt(3)*x - sqrt(5)*y", ctx);
        const Poly2 ppp = diag_subst_bi(p, p);
        expect_poly("p(p,p)", ppp,
                    parse_poly2("sqrt(3)*y^2 - sqrt(3)*x^2 + 3*x - sqrt(3)*sqrt(5)*y - sqrt(5)*y^2"
                                " + sqrt(5)*x^2 - sqrt(5)*sqrt(3)*x + 5*y",
                                ctx));
        expect_eq("D(p(p,p))", deficit2(ppp).deficit, 0u);
        expect_eq("D(p)", deficit2(p).deficit, 1u);
        return std::string("D(p(p,p)) = 0 < 1 = D(p)");
    });

    replay.run("integers inside the rationals", [] {
        const auto ctx = make_context("Z<Q");
        const Poly1 p = parse_poly1("x^2 + 2/3*x", ctx);
        const Poly1 q = parse_poly1("6*x^2 + 3/2*x", ctx);
        expect_poly("p(q)", compose(p, q), parse_poly1("36*x^4 + 18*x^3 + 25/4*x^2 + x", ctx));
        const TheoremVerdict v = verify_theorem(TheoremId::Ring, pair(p, q), ctx);
        expect_class(v, Classification::Confirms);
        expect_eq("D(p(q))", witness_deficit(v, "p(q)"), 2u);
        expect_eq("D(q)", witness_deficit(v, "q"), 1u);
        return std::string("2 = D(p(q)) >= D(q) = 1, equality fails");
    });

    replay.run("characteristic 2 divides deg p", [] {
        const auto ctx = make_context("GF(2^2)");
        const Poly1 p = parse_poly1("x^2", ctx);
        const Poly1 q = parse_poly1("x^2 + g*x", ctx);
        expect_poly("p(q)", compose(p, q), parse_poly1("x^4 + g^2*x^2", ctx));
        const TheoremVerdict v = verify_theorem(TheoremId::FF, pair(p, q), ctx);
        expect_class(v, Classification::Vacuous);
        expect_eq("failed hypothesis", v.failed_hypothesis(), std::string("characteristic does not divide deg p"));
        expect("equality fails", !v.conclusion_holds);
        expect_eq("D(p(q))", witness_deficit(v, "p(q)"), 2u);
        expect_eq("D(q)", witness_deficit(v, "q"), 1u);
        return std::string("D(p(q)) = 2, D(q) = 1");
    });

    replay.run("iterates of x^2 + sqrt(2)", [] {
        const auto ctx = make_context("Q(sqrt 2)");
        const Poly1 p = parse_poly1("x^2 + sqrt(2)", ctx);
        for (unsigned r = 1; r <= 4; ++r) {
            const Poly1 pr = iterate(p, r);
            const std::size_t top = std::size_t{1} << r;
            expect_eq("degree", pr.degree(), top);
            expect("x^" + std::to_string(top - 1) + " coefficient in Q", is_in_subfield(pr.coefficient(top - 1)));
            expect("x^" + std::to_string(top - 2) + " coefficient outside Q", !is_in_subfield(pr.coefficient(top - 2)));
            expect_eq("D(p^[r])", deficit1(pr).deficit, 2u);
        }
        return std::string("r = 1..4");
    });

    replay.run("no p with r = p(q)", [] {
        const auto ctx = make_context("Q(sqrt 2, sqrt 3)");
        const Poly1 r = parse_poly1("x^6 + x^5 + sqrt(2)*x^4 + x + 1", ctx);
        const Poly1 q = parse_poly1("x^3 + sqrt(3)*x^2 + 1", ctx);
        expect_eq("D(r)", deficit1(r).deficit, 2u);
        expect_eq("D(q)", deficit1(q).deficit, 1u);
        const ObstructionVerdict v = decomposition_obstruction(r, q);
        expect("IMPOSSIBLE", v.impossible);
        return v.reason;
    });

    replay.run("bivariate inner polynomial", [] {
        const auto ctx = make_context("Q(sqrt 2)");
        TheoremInputs in;
        in.p = parse_poly1("x^2", ctx);
        in.q2 = parse_poly2("x^2 + y^2 + sqrt(2)*x", ctx);
        expect_poly("p(q)", compose_uni_bi(*in.p, *in.q2),
                    parse_poly2("x^4 + 2*sqrt(2)*x^3 + 2*x^2*y^2 + 2*x^2 + 2*sqrt(2)*x*y^2 + y^4", ctx));
        const TheoremVerdict v = verify_theorem(TheoremId::TwoVar, in, ctx);
        expect_class(v, Classification::Confirms);
        expect_eq("D(p(q))", witness_deficit(v, "p(q)"), 1u);
        return std::string("D(p(q)) = 1 = D(q)");
    });

    FixtureReport report = replay.take();
    report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace deficitlab
