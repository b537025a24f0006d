#include "deficitlab/gf_poly.hpp"

#include <stdexcept>

namespace deficitlab::gfp {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) noexcept {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exponent != 0) {
        if (exponent & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exponent >>= 1U;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) noexcept { return pow_mod(a, p - 2, p); }

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
    trim(out);
    return out;
}

Poly rem(Poly a, const Poly& f, std::uint64_t p) {
    Poly g = f;
    trim(g);
    if (g.empty()) throw std::domain_error("gfp::rem: zero modulus");
    trim(a);
    const std::size_t n = g.size() - 1;
    const std::uint64_t lead_inv = inv_mod(g.back(), p);
    while (a.size() > n) {
        const std::uint64_t c = mul_mod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - n;
        for (std::size_t j = 0; j <= n; ++j) a[shift + j] = (a[shift + j] + p - mul_mod(c, g[j], p)) % p;
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = mul_mod(c, inv, p);
    }
    return a;
}

namespace {

Poly pow_rem(Poly base, std::uint64_t exponent, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = rem(std::move(base), f, p);
    while (exponent != 0) {
        if (exponent & 1U) result = rem(mul(result, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        exponent >>= 1U;
    }
    return rem(std::move(result), f, p);
}

Poly sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

}  // namespace

bool is_irreducible(const Poly& f_in, std::uint64_t p) {
    Poly f = f_in;
    trim(f);
    if (f.size() < 2) return false;
    const auto n = static_cast<unsigned>(f.size() - 1);
    if (n == 1) return true;

    // frob[k] = x^(p^k) mod f
    std::vector<Poly> frob(n + 1);
    frob[0] = rem(Poly{0, 1}, f, p);
    for (unsigned k = 1; k <= n; ++k) frob[k] = pow_rem(frob[k - 1], p, f, p);

    const Poly x = rem(Poly{0, 1}, f, p);
    if (sub(frob[n], x, p) != Poly{}) return false;

    unsigned rest = n;
    for (unsigned q = 2; q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        const Poly g = gcd(sub(frob[n / q], x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

Poly smallest_irreducible(std::uint64_t p, unsigned n) {
    // Odometer over (c0, ..., c_{n-1}) with c0 the most significant digit.
    Poly f(n + 1, 0);
    f[n] = 1;
    for (;;) {
        if (is_irreducible(f, p)) return f;
        int pos = static_cast<int>(n) - 1;
        while (pos >= 0 && f[pos] == p - 1) {
            f[pos] = 0;
            --pos;
        }
        if (pos < 0) throw std::logic_error("no irreducible polynomial found");
        ++f[pos];
    }
}

}  // namespace deficitlab::gfp
