#pragma once

#include "gsym/expr/expression.hpp"

#include <functional>
#include <map>

namespace gsym {

using Bindings = std::map<Symbol, double>;

/// Numeric value of a function-symbol instance (with its derivative
/// multi-index) at the given bindings.
using FuncSymCallback = std::function<double(const FuncSymNode&, const Bindings&)>;
using FuncSymTable = std::map<FuncSymbol, FuncSymCallback>;

/// Callbacks that realize each function symbol by a concrete expression;
/// derivatives are taken symbolically.
FuncSymTable funcsym_table(const std::map<FuncSymbol, Expr>& realizations);

/// Double-precision value. Throws UnboundSymbol, DomainError (ln or a
/// fractional power of a non-positive number, a Y/K/chi argument <= 0,
/// division by zero, non-finite results) or UnresolvedFuncSym.
double eval_num(const Expr& e, const Bindings& bindings, const FuncSymTable* callbacks = nullptr);

}  // namespace gsym
