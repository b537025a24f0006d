#include <doctest.h>

#include "../support.hpp"

using namespace deficitlab;
using testing::P;
using testing::P2;

TEST_CASE("homogeneous parts") {
    const auto ctx = make_context("Q(sqrt 3, sqrt 5)");
    const auto parts = homogeneous_parts(P2(ctx, "y^2 - x^2 + sqrt(3)*x - sqrt(5)*y"));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].degree == 1);
    CHECK(parts[0].component == P2(ctx, "sqrt(3)*x - sqrt(5)*y"));
    CHECK_FALSE(parts[0].in_f);
    CHECK(parts[1].degree == 2);
    CHECK(parts[1].component == P2(ctx, "y^2 - x^2"));
    CHECK(parts[1].in_f);

    const auto q = make_context("Q");
    const auto p2 = homogeneous_parts(P2(q, "x^2 - y^2 + 1"));
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].degree == 0);
    CHECK(p2[0].in_f);
    CHECK(p2[1].in_f);

    const auto single = homogeneous_parts(P2(q, "x^3*y"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].degree == 4);

    CHECK_THROWS_AS(homogeneous_parts(Poly2(q)), Error);
}

TEST_CASE("bivariate deficit") {
    CHECK(deficit2(P2(make_context("Q(sqrt 3, sqrt 5)"), "y^2 - x^2 + sqrt(3)*x - sqrt(5)*y")).deficit == 1);
    const DeficitReport r = deficit2(P2(make_context("Q(sqrt 2)"), "x^3*y - 2/3*x*y + y^2"));
    CHECK(r.in_f);
    CHECK(r.deficit == 4);
    CHECK(deficit2(P2(make_context("Q(sqrt 2)"), "x^2 + y^2 + sqrt(2)*x")).deficit == 1);
    CHECK_THROWS_AS(deficit2(Poly2(make_context("Q"))), Error);
}

TEST_CASE("univariate into bivariate") {
    const auto ctx = make_context("Q(sqrt 2)");
    const Poly2 q = P2(ctx, "x^2 + y^2 + sqrt(2)*x");
    const Poly2 pq = compose_uni_bi(P(ctx, "x^2"), q);
    CHECK(pq == P2(ctx, "x^4 + 2*x^2*y^2 + y^4 + 2*sqrt(2)*x^3 + 2*sqrt(2)*x*y^2 + 2*x^2"));
    CHECK(pq == compose_oracle2(P(ctx, "x^2"), q));
    CHECK(deficit2(pq).deficit == 1);
    CHECK(compose_uni_bi(P(ctx, "x"), q) == q);
    CHECK(compose_uni_bi(P(ctx, "3 + sqrt(2)"), q) == P2(ctx, "3 + sqrt(2)"));
}

TEST_CASE("diagonal substitution") {
    const auto qi = make_context("Q(sqrt -1)");
    CHECK(diag_subst_uni(P2(qi, "x^2 - y^2 + 1"), P(qi, "x^2 + i*x")) == P(qi, "1"));
    const auto q = make_context("Q");
    CHECK(diag_subst_uni(P2(q, "x + y"), P(q, "x")) == P(q, "2*x"));
    CHECK(diag_subst_uni(P2(q, "x*y"), P(q, "x + 1")) == P(q, "x^2 + 2*x + 1"));

    const auto ctx = make_context("Q(sqrt 3, sqrt 5)");
    const Poly2 p = P2(ctx, "y^2 - x^2 + sqrt(3)*x - sqrt(5)*y");
    CHECK(diag_subst_bi(p, p) == P2(ctx,
                                    "sqrt(3)*y^2 - sqrt(3)*x^2 + 3*x - sqrt(3)*sqrt(5)*y - sqrt(5)*y^2 + sqrt(5)*x^2"
                                    " - sqrt(5)*sqrt(3)*x + 5*y"));
    CHECK(diag_subst_bi(P2(ctx, "x"), p) == p);
    CHECK(diag_subst_bi(P2(q, "x + y"), P2(q, "x + y")) == P2(q, "2*x + 2*y"));
    CHECK_THROWS_AS(to_univariate(P2(q, "x*y")), Error);
}

// p(q, q) = Σ_k (sum of the coefficients of part k of p) · q^k, since every monomial
// of total degree k becomes q^k.
TEST_CASE("diagonal substitution matches the collapsed univariate form") {
    for (const char* name : {"Q(sqrt 2)", "Q(sqrt -1)", "GF(3^2)", "Q[t]"}) {
        const auto ctx = make_context(name);
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            const Poly2 p = testing::random_poly2_raw(ctx, rng, 3);
            const Poly1 q = testing::random_poly_raw(ctx, rng, 3);
            std::vector<Element> collapsed;
            for (const auto& part : p.parts()) {
                Element sum = Element::zero(ctx);
                for (const auto& term : part) sum += term.second;
                collapsed.push_back(sum);
            }
            const Poly1 expected = compose(Poly1(ctx, collapsed), q);
            REQUIRE(diag_subst_uni(p, q) == expected);
            REQUIRE(diag_subst_bi(p, Poly2::from_univariate(q)) == Poly2::from_univariate(expected));
        }
    }
}

TEST_CASE("parts reassemble and multiply by degree") {
    const auto ctx = make_context("Q(sqrt 2, sqrt 3)");
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Poly2 p = testing::random_poly2_raw(ctx, rng, 4);
        if (p.is_zero()) continue;
        Poly2 sum(ctx);
        const auto parts = homogeneous_parts(p);
        for (const auto& part : parts) sum += part.component;
        REQUIRE(sum == p);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                const auto product_parts = homogeneous_parts(a.component * b.component);
                REQUIRE(product_parts.size() == 1);
                REQUIRE(product_parts[0].degree == a.degree + b.degree);
            }
    }
}

TEST_CASE("bivariate oracle agreement") {
    for (const char* name : {"Q(sqrt 2)", "Q(sqrt -1)", "GF(2^2)", "Z<Q"}) {
        CAPTURE(name);
        const auto ctx = make_context(name);
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 200; ++trial) {
            const Poly1 p = testing::random_poly_raw(ctx, rng, 3);
            const Poly2 q = testing::random_poly2_raw(ctx, rng, 3);
            REQUIRE(compose_uni_bi(p, q) == compose_oracle2(p, q));
        }
    }
}
