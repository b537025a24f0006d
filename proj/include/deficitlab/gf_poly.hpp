#pragma once

// Dense polynomials over GF(p), coefficients low-to-high in 0..p-1. Used to validate and
// select finite-field moduli and to multiply residues.

#include <cstdint>
#include <vector>

namespace deficitlab::gfp {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) noexcept;
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) noexcept;

bool is_prime(std::uint64_t n) noexcept;

void trim(Poly& a);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
/// Remainder of a modulo a nonzero f.
Poly rem(Poly a, const Poly& f, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);

/// Rabin's test: f of degree n ≥ 1 is irreducible iff x^(p^n) ≡ x (mod f) and
/// gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n.
bool is_irreducible(const Poly& f, std::uint64_t p);

/// Lexicographically smallest monic irreducible of degree n, comparing coefficients
/// c0, c1, ... in that order.
Poly smallest_irreducible(std::uint64_t p, unsigned n);

}  // namespace deficitlab::gfp
