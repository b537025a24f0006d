#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace deficitlab {

// Token tree produced by the expression parser. `a - b` is stored as Sum{a, Negate{b}}.
struct Expr {
    enum class Kind { Integer, Fraction, Sqrt, Symbol, Negate, Sum, Product, Power };

    Kind kind = Kind::Integer;
    mpz_class numerator;     // Integer, Fraction
    mpz_class denominator;   // Fraction
    long radicand = 0;       // Sqrt
    char symbol = 0;         // Symbol: one of i t g x y
    unsigned long exponent = 0;  // Power
    std::vector<Expr> children;
    std::size_t position = 0;  // offset of the first character of this node
};

}  // namespace deficitlab
