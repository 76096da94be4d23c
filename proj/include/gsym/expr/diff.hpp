#pragma once

#include "gsym/expr/expression.hpp"

namespace gsym {

/// Exact partial derivative with respect to v. Every other symbol, jet
/// coordinates included, is held fixed; FuncSym derivatives bump the
/// multi-index. The result is not normalized.
Expr diff(const Expr& e, Symbol v);

}  // namespace gsym
