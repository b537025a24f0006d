#pragma once

// Shared helpers for the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "deficitlab/parser.hpp"
#include "deficitlab/theorems.hpp"

namespace testing {

using namespace deficitlab;

// Contexts the oracle and round-trip properties sweep over.
inline const std::vector<std::string>& sweep_contexts() {
    static const std::vector<std::string> names{"Q(sqrt 2)", "Q(sqrt 2, sqrt 3)", "Q(sqrt -1)", "Q[t]",
                                                "GF(2^2)",   "GF(3^2)",           "Z<Q"};
    return names;
}

inline Element el(const ContextPtr& ctx, const std::string& text) { return parse_element(text, ctx); }
inline Poly1 P(const ContextPtr& ctx, const std::string& text) { return parse_poly1(text, ctx); }
inline Poly2 P2(const ContextPtr& ctx, const std::string& text) { return parse_poly2(text, ctx); }

// Random element built straight from coordinates, without the library's pools.
inline Element random_element(const ContextPtr& ctx, std::mt19937_64& rng) {
    auto small = [&] {
        const long num = static_cast<long>(rng() % 9) - 4;
        const long den = static_cast<long>(rng() % 3) + 1;
        return mpq_class(num, den);
    };
    switch (ctx->representation()) {
        case Representation::Residue: {
            std::vector<std::uint64_t> r(ctx->degree());
            for (auto& v : r) v = rng() % ctx->prime();
            return Element::from_residues(ctx, r);
        }
        case Representation::TPoly: {
            std::vector<mpq_class> c(1 + rng() % 3);
            for (auto& v : c) v = small();
            return Element::from_coordinates(ctx, c);
        }
        default: {
            std::vector<mpq_class> c(ctx->basis_size());
            for (auto& v : c) v = rng() % 3 == 0 ? mpq_class(0) : small();
            return Element::from_coordinates(ctx, c);
        }
    }
}

inline Poly1 random_poly_raw(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t max_degree) {
    std::vector<Element> c;
    const std::size_t n = rng() % (max_degree + 1);
    for (std::size_t k = 0; k <= n; ++k) c.push_back(random_element(ctx, rng));
    return Poly1(ctx, c);
}

inline Poly2 random_poly2_raw(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t max_degree) {
    std::vector<Poly2::Monomial> terms;
    const std::size_t n = rng() % (max_degree + 1);
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t ex = 0; ex <= k; ++ex)
            if (rng() % 2 == 0) terms.push_back({ex, k - ex, random_element(ctx, rng)});
    return Poly2::from_terms(ctx, terms);
}

}  // namespace testing
