#pragma once

#include "gsym/expr/expression.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace gsym {

/// Parses the expression grammar
///
///     expr   := term { ("+"|"-") term } ;
///     term   := factor { ("*"|"/") factor } ;
///     factor := ["-"] base ["^" factor] ;
///     base   := NUMBER | IDENT | IDENT "(" expr {"," expr} ")" | "(" expr ")" ;
///
/// Exponents must reduce to rational constants. Function symbols carry
/// derivative suffixes in their name: psi_xt(x,t) is d2 psi / dx dt.
///
/// Throws SyntaxError (with byte offset and expected tokens) or UnknownSymbol.
Expr parse(std::string_view text);

/// Single-line text that parse() reads back to an equivalent expression.
/// Constant factors are printed first; negative powers inside products are
/// printed as divisions.
std::string print(const Expr& e);

inline std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << print(e); }

}  // namespace gsym
