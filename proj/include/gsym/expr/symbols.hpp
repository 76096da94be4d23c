#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace gsym {

/// The closed variable alphabet. Enumerator order is the canonical atom order.
enum class Symbol : int {
    x, t, u,
    u_x, u_t,
    u_xx, u_xt, u_tt,
    u_xxx, u_xxt, u_xtt, u_ttt,
    C1, C2,
    eps,
    a1, a2, a3, a4,
};

inline constexpr std::size_t kSymbolCount = 19;

std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

/// Orders (n_x, n_t) of a jet coordinate; u itself is (0, 0).
struct JetOrder {
    int nx = 0;
    int nt = 0;
    int total() const { return nx + nt; }
};

/// True for u and every u_J.
bool is_dependent(Symbol s);
/// True for u_J with |J| >= 1.
bool is_jet(Symbol s);
std::optional<JetOrder> jet_order(Symbol s);
std::optional<Symbol> jet_symbol(JetOrder order);

/// Elementary and special functions usable with Apply.
enum class Function : int {
    exp, ln, sqrt, sin, cos, sinh, cosh,
    besselj0, besselj1, bessely0, bessely1,
    besseli0, besseli1, besselk0, besselk1,
    shi, chi,
};

std::string_view function_name(Function f);
std::optional<Function> function_from_name(std::string_view name);

/// Opaque function symbols such as psi(x,t) or F(u).
enum class FuncSymbol : int { psi, F, G, xi1, xi2, phi };

std::string_view funcsym_name(FuncSymbol f);
std::optional<FuncSymbol> funcsym_from_name(std::string_view name);

enum class NamedConstant : int { pi, gamma };

std::string_view named_constant_name(NamedConstant c);
std::optional<NamedConstant> named_constant_from_name(std::string_view name);
double named_constant_value(NamedConstant c);

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243104215933593992;

}  // namespace gsym
