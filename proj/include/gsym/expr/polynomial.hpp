#pragma once

#include "gsym/expr/rational.hpp"

#include <map>
#include <optional>
#include <vector>

/// Dense-exponent multivariate polynomials over Q, used for gcd cancellation
/// inside the normal form. Variables are positions 0..n-1 in the exponent
/// vector; all exponents are non-negative.
namespace gsym::poly {

using Exps = std::vector<int>;
/// Keyed by exponent vector; std::map's lexicographic order makes rbegin()
/// the lex-leading term.
using MPoly = std::map<Exps, Rational>;

MPoly constant(const Rational& c, std::size_t nvars);
bool is_constant(const MPoly& p);
MPoly add(const MPoly& a, const MPoly& b);
MPoly sub(const MPoly& a, const MPoly& b);
MPoly mul(const MPoly& a, const MPoly& b);
MPoly scale(const MPoly& a, const Rational& c);

int degree(const MPoly& p, std::size_t var);
/// Coefficient of var^d, as a polynomial with var's exponent cleared.
MPoly coefficient(const MPoly& p, std::size_t var, int d);

/// a / b if b divides a exactly.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var);

/// Leading (lex) coefficient scaled to 1.
MPoly monic(const MPoly& p);
/// Monic greatest common divisor; gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace gsym::poly
