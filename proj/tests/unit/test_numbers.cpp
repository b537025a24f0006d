#include <doctest.h>

#include "../support.hpp"
#include "deficitlab/gf_poly.hpp"

using namespace deficitlab;
using testing::el;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::RejectSpec;
}

// Monic f of degree 2 or 3 over GF(p) is irreducible iff it has no root.
bool has_root(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t k = f.size(); k-- > 0;) acc = (acc * x + f[k]) % p;
        if (acc == 0) return true;
    }
    return false;
}

// First rootless monic of degree n, with c0 as the most significant digit.
std::vector<std::uint64_t> first_rootless(std::uint64_t p, unsigned n) {
    std::vector<std::uint64_t> digits(n, 0);  // digits[0] = c0 is the most significant
    for (;;) {
        std::vector<std::uint64_t> f(digits);
        f.push_back(1);
        if (!has_root(f, p)) return f;
        std::size_t k = n;
        while (k-- > 0) {
            if (++digits[k] < p) break;
            digits[k] = 0;
        }
    }
}

}  // namespace

TEST_CASE("context construction") {
    auto ctx = make_context("Q(sqrt 2, sqrt 3)");
    CHECK(ctx->basis_size() == 4);
    CHECK(characteristic(*ctx) == 0);
    CHECK(ctx->f_is_field());

    CHECK(code_of([] { make_context("Q(sqrt 2, sqrt 8)"); }) == ErrorCode::RejectSpec);
    CHECK(code_of([] { make_context("Q(sqrt 2, sqrt 3, sqrt 6)"); }) == ErrorCode::RejectSpec);
    CHECK(code_of([] { make_context("Q(sqrt 4)"); }) == ErrorCode::RejectSpec);
    CHECK(code_of([] { make_context("GF(4^2)"); }) == ErrorCode::RejectSpec);
    CHECK(code_of([] { make_context("GF(2^4; sub 3)"); }) == ErrorCode::RejectSpec);
    CHECK(code_of([] { make_context("GF(2^2; mod 1,0,1)"); }) == ErrorCode::RejectSpec);
    CHECK(code_of([] { make_context("R"); }) == ErrorCode::RejectSpec);

    CHECK_FALSE(make_context("Z<Q")->f_is_field());
    CHECK_FALSE(make_context("set:realsUnionImag")->f_is_field());
    CHECK(make_context("Q[t]")->basis_size() == 0);
}

TEST_CASE("characteristic") {
    CHECK(characteristic(*make_context("Q(sqrt 2)")) == 0);
    CHECK(characteristic(*make_context("GF(2^2)")) == 2);
    CHECK(characteristic(*make_context("GF(3^2)")) == 3);
    CHECK(characteristic(*make_context("Z<Q")) == 0);
}

TEST_CASE("default modulus is the smallest irreducible") {
    CHECK(make_context("GF(2^2)")->modulus() == std::vector<std::uint64_t>{1, 1, 1});
    for (std::uint64_t p : {2, 3, 5, 7, 11})
        for (unsigned n : {2u, 3u}) {
            CAPTURE(p);
            CAPTURE(n);
            const auto ctx = make_context("GF(" + std::to_string(p) + "^" + std::to_string(n) + ")");
            CHECK(ctx->modulus() == first_rootless(p, n));
        }
}

TEST_CASE("Rabin test agrees with root search on quadratics and cubics") {
    for (std::uint64_t p : {2, 3, 5})
        for (unsigned n : {2u, 3u}) {
            std::vector<std::uint64_t> f(n + 1, 0);
            f[n] = 1;
            std::uint64_t total = 1;
            for (unsigned k = 0; k < n; ++k) total *= p;
            for (std::uint64_t code = 0; code < total; ++code) {
                std::uint64_t c = code;
                for (unsigned k = 0; k < n; ++k, c /= p) f[k] = c % p;
                CHECK(gfp::is_irreducible(f, p) == !has_root(f, p));
            }
        }
}

TEST_CASE("spec text round trip") {
    for (const char* text : {"Q", "Q[t]", "Z<Q", "set:complementQ", "set:realsUnionImag", "Q(sqrt 2, sqrt -3)",
                             "GF(2^4; sub 2)", "GF(3^2; mod 2,2,1)"}) {
        const ContextSpec spec = ContextSpec::parse(text);
        CHECK(ContextSpec::parse(spec.to_string()) == spec);
    }
}

TEST_CASE("literals") {
    const auto q2 = make_context("Q(sqrt 2)");
    const Element e = el(q2, "1/2 + 3*sqrt(2)");
    CHECK(e.coordinates() == std::vector<mpq_class>{mpq_class(1, 2), mpq_class(3)});
    CHECK(el(q2, "sqrt(8)") == el(q2, "2*sqrt(2)"));
    CHECK(code_of([&] { el(q2, "t"); }) == ErrorCode::UnknownSymbol);
    CHECK(code_of([&] { el(q2, "sqrt(3)"); }) == ErrorCode::UnknownSymbol);
    CHECK(code_of([&] { el(q2, "1/0"); }) == ErrorCode::DivisionByZero);

    const auto qi = make_context("Q(sqrt -1)");
    CHECK(el(qi, "i^2") == Element::integer(qi, -1));
    CHECK(el(qi, "sqrt(-4)") == el(qi, "2*i"));

    const auto q23 = make_context("Q(sqrt 2, sqrt 3)");
    CHECK(el(q23, "sqrt(6)") == el(q23, "sqrt(2)*sqrt(3)"));
}

TEST_CASE("g^3 = 1 in GF(4)") {
    // repeated multiplication of residue pairs modulo x^2 + x + 1 over GF(2)
    std::uint64_t c0 = 1, c1 = 0;
    for (int k = 0; k < 3; ++k) {
        // (c0 + c1 g) * g = c0 g + c1 g^2 = c0 g + c1 (g + 1)
        const std::uint64_t n0 = c1, n1 = (c0 + c1) % 2;
        c0 = n0;
        c1 = n1;
    }
    REQUIRE(c0 == 1);
    REQUIRE(c1 == 0);
    const auto gf4 = make_context("GF(2^2)");
    CHECK(el(gf4, "g^3") == Element::one(gf4));
    CHECK(is_in_subfield(el(gf4, "g^3")));
    CHECK_FALSE(is_in_subfield(el(gf4, "g")));
}

TEST_CASE("arithmetic examples") {
    const auto q2 = make_context("Q(sqrt 2)");
    CHECK(el(q2, "sqrt(2)") * el(q2, "sqrt(2)") == Element::integer(q2, 2));
    const Element u = el(q2, "1 + sqrt(2)");
    CHECK(u.inverse() == el(q2, "-1 + sqrt(2)"));
    CHECK(u * u.inverse() == Element::one(q2));
    CHECK(code_of([&] { (void)(u / Element::zero(q2)); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([&] { (void)(u + Element::one(make_context("Q(sqrt 3)"))); }) == ErrorCode::ContextMismatch);
    CHECK(arithmetic(ArithOp::Sub, u, u).is_zero());

    const auto gf4 = make_context("GF(2^2)");
    const Element g1 = el(gf4, "g + 1");
    CHECK(g1 * g1 == el(gf4, "g"));

    const auto qt = make_context("Q[t]");
    CHECK(code_of([&] { (void)el(qt, "t").inverse(); }) == ErrorCode::NotInvertible);
    CHECK(el(qt, "t^2 - 1") / el(qt, "t + 1") == el(qt, "t - 1"));
}

TEST_CASE("membership predicates") {
    const auto q23 = make_context("Q(sqrt 2, sqrt 3)");
    CHECK_FALSE(is_in_subfield(el(q23, "sqrt(3)")));
    CHECK(is_in_subfield(el(q23, "sqrt(2)*sqrt(2) + 1/3")));

    const auto z = make_context("Z<Q");
    CHECK_FALSE(is_in_subfield(el(z, "25/4")));
    CHECK(is_in_subfield(el(z, "-36")));

    const auto qt = make_context("Q[t]");
    CHECK(is_in_subfield(el(qt, "3/2")));
    CHECK_FALSE(is_in_subfield(el(qt, "t - t^2")));

    const auto cq = make_context("set:complementQ");
    CHECK(is_in_subfield(el(cq, "t")));
    CHECK_FALSE(is_in_subfield(el(cq, "0")));
    CHECK_FALSE(is_in_subfield(el(cq, "2")));

    const auto ri = make_context("set:realsUnionImag");
    CHECK(is_in_subfield(el(ri, "-2*i")));
    CHECK(is_in_subfield(el(ri, "1/2")));
    CHECK_FALSE(is_in_subfield(el(ri, "1 + i")));

    const auto gf16 = make_context("GF(2^4; sub 2)");
    CHECK(is_in_subfield(el(gf16, "g^5")));  // g^5 has order 3, so it lies in GF(4)
    CHECK_FALSE(is_in_subfield(el(gf16, "g")));
}

TEST_CASE("Frobenius membership equals constant residue when m = 1") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
        const auto ctx = make_context("GF(" + std::to_string(p) + "^" + std::to_string(n) + ")");
        std::uint64_t order = 1;
        for (unsigned k = 0; k < n; ++k) order *= p;
        std::vector<std::uint64_t> r(n);
        for (std::uint64_t code = 0; code < order; ++code) {
            std::uint64_t c = code;
            bool constant = true;
            for (unsigned k = 0; k < n; ++k, c /= p) {
                r[k] = c % p;
                if (k > 0 && r[k] != 0) constant = false;
            }
            const Element a = Element::from_residues(ctx, r);
            if (frobenius_fixed(a, 1) != constant) FAIL("GF(" << p << "^" << n << ") residue " << code);
            if (is_in_subfield(a) != constant) FAIL("membership, GF(" << p << "^" << n << ") residue " << code);
        }
    }
}

TEST_CASE("subfield GF(p^m) has exactly p^m members") {
    for (auto [p, n, m] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{2, 4, 2}, {3, 4, 2}, {2, 6, 3}, {2, 6, 2}}) {
        const auto ctx = make_context("GF(" + std::to_string(p) + "^" + std::to_string(n) + "; sub " + std::to_string(m) + ")");
        std::uint64_t order = 1, expected = 1;
        for (unsigned k = 0; k < n; ++k) order *= p;
        for (unsigned k = 0; k < m; ++k) expected *= p;
        std::uint64_t members = 0;
        std::vector<std::uint64_t> r(n);
        for (std::uint64_t code = 0; code < order; ++code) {
            std::uint64_t c = code;
            for (unsigned k = 0; k < n; ++k, c /= p) r[k] = c % p;
            members += is_in_subfield(Element::from_residues(ctx, r)) ? 1 : 0;
        }
        CHECK(members == expected);
    }
}

TEST_CASE("field axioms on seeded triples") {
    for (const char* name : {"Q", "Q(sqrt 2)", "Q(sqrt 2, sqrt 3)", "Q(sqrt -1)", "Q(sqrt 2, sqrt 3, sqrt 5)",
                                    "Q(sqrt -1, sqrt 2, sqrt -5)", "Q[t]", "GF(2^2)", "GF(3^2)", "GF(5^3)", "Z<Q"}) {
        CAPTURE(name);
        const auto ctx = make_context(name);
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 200; ++trial) {
            const Element a = testing::random_element(ctx, rng);
            const Element b = testing::random_element(ctx, rng);
            const Element c = testing::random_element(ctx, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            REQUIRE(a - a == Element::zero(ctx));
            if (a.is_zero()) continue;
            if (ctx->representation() == Representation::TPoly && a.coordinates().size() > 1) continue;  // not a unit
            REQUIRE(a * a.inverse() == Element::one(ctx));
            REQUIRE((b / a) * a == b);
        }
    }
}

TEST_CASE("properties e0 and e1 on field contexts") {
    for (const char* name : {"Q(sqrt 2)", "Q(sqrt 2, sqrt 3)", "Q(sqrt -1)", "Q[t]", "GF(3^2)", "GF(2^4; sub 2)"}) {
        CAPTURE(name);
        const auto ctx = make_context(name);
        std::mt19937_64 rng(7);
        int checked = 0;
        while (checked < 200) {
            const Element u = testing::random_element(ctx, rng);
            const Element v = testing::random_element(ctx, rng);
            if (u.is_zero() || !is_in_subfield(u) || is_in_subfield(v)) continue;
            ++checked;
            REQUIRE_FALSE(is_in_subfield(u * v));
            REQUIRE_FALSE(is_in_subfield(u + v));
            if (characteristic(*ctx) == 0)
                for (long n = 1; n <= 50; ++n) REQUIRE_FALSE(is_in_subfield(Element::integer(ctx, n) * v));
        }
    }
}

TEST_CASE("element text round trip") {
    for (const char* name : {"Q(sqrt 2, sqrt -3)", "Q(sqrt -1)", "Q[t]", "GF(3^3)", "Z<Q", "set:realsUnionImag"}) {
        const auto ctx = make_context(name);
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const Element a = testing::random_element(ctx, rng);
            REQUIRE(el(ctx, a.to_string()) == a);
        }
    }
}
