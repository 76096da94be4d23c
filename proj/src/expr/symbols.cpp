#include "gsym/expr/symbols.hpp"

#include <numbers>

namespace gsym {
namespace {

constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "x", "t", "u", "u_x", "u_t", "u_xx", "u_xt", "u_tt",
    "u_xxx", "u_xxt", "u_xtt", "u_ttt", "C1", "C2", "eps",
    "a1", "a2", "a3", "a4",
};

constexpr std::array<JetOrder, 10> kJetOrders = {{
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3},
}};

constexpr std::array<std::string_view, 17> kFunctionNames = {
    "exp", "ln", "sqrt", "sin", "cos", "sinh", "cosh",
    "besselj0", "besselj1", "bessely0", "bessely1",
    "besseli0", "besseli1", "besselk0", "besselk1",
    "shi", "chi",
};

constexpr std::array<std::string_view, 6> kFuncSymNames = {"psi", "F", "G", "xi1", "xi2", "phi"};

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::string_view, N>& names, std::string_view name) {
    for (std::size_t i = 0; i < N; ++i)
        if (names[i] == name) return static_cast<E>(i);
    return std::nullopt;
}

}  // namespace

std::string_view symbol_name(Symbol s) { return kSymbolNames[static_cast<std::size_t>(s)]; }

std::optional<Symbol> symbol_from_name(std::string_view name) {
    return lookup<Symbol>(kSymbolNames, name);
}

bool is_dependent(Symbol s) {
    const int i = static_cast<int>(s);
    return i >= static_cast<int>(Symbol::u) && i <= static_cast<int>(Symbol::u_ttt);
}

bool is_jet(Symbol s) { return is_dependent(s) && s != Symbol::u; }

std::optional<JetOrder> jet_order(Symbol s) {
    if (!is_dependent(s)) return std::nullopt;
    return kJetOrders[static_cast<std::size_t>(s) - static_cast<std::size_t>(Symbol::u)];
}

std::optional<Symbol> jet_symbol(JetOrder order) {
    for (std::size_t i = 0; i < kJetOrders.size(); ++i)
        if (kJetOrders[i].nx == order.nx && kJetOrders[i].nt == order.nt)
            return static_cast<Symbol>(static_cast<std::size_t>(Symbol::u) + i);
    return std::nullopt;
}

std::string_view function_name(Function f) { return kFunctionNames[static_cast<std::size_t>(f)]; }

std::optional<Function> function_from_name(std::string_view name) {
    return lookup<Function>(kFunctionNames, name);
}

std::string_view funcsym_name(FuncSymbol f) { return kFuncSymNames[static_cast<std::size_t>(f)]; }

std::optional<FuncSymbol> funcsym_from_name(std::string_view name) {
    return lookup<FuncSymbol>(kFuncSymNames, name);
}

std::string_view named_constant_name(NamedConstant c) { return c == NamedConstant::pi ? "pi" : "gamma"; }

std::optional<NamedConstant> named_constant_from_name(std::string_view name) {
    if (name == "pi") return NamedConstant::pi;
    if (name == "gamma") return NamedConstant::gamma;
    return std::nullopt;
}

double named_constant_value(NamedConstant c) {
    return c == NamedConstant::pi ? std::numbers::pi : kEulerGamma;
}

}  // namespace gsym
