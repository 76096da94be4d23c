#include "gsym/expr/io.hpp"

namespace gsym {
namespace {

bool starts_with_minus(const std::string& s) { return !s.empty() && s.front() == '-'; }

std::string paren(const std::string& s) { return "(" + s + ")"; }

// Operand of '*' or the left part of '/'.
std::string mul_operand(const Expr& e) {
    std::string s = print(e);
    if (e.kind() == Expr::Kind::Sum || e.kind() == Expr::Kind::Product || starts_with_minus(s)) return paren(s);
    if (const auto* c = e.const_value(); c && !c->is_integer()) return paren(s);
    return s;
}

std::string power_base(const Expr& base) {
    std::string s = print(base);
    switch (base.kind()) {
        case Expr::Kind::Sum:
        case Expr::Kind::Product:
        case Expr::Kind::Power:
            return paren(s);
        case Expr::Kind::Const: {
            const Rational& c = *base.const_value();
            return (c.sign() < 0 || !c.is_integer()) ? paren(s) : s;
        }
        default:
            return s;
    }
}

std::string print_power(const Expr& base, const Rational& exponent) {
    std::string out = power_base(base) + "^";
    if (exponent.is_integer() && exponent.sign() >= 0) return out + exponent.str();
    return out + paren(exponent.str());
}

std::string print_product(const ProductNode& n) {
    if (n.factors.empty()) return "1";
    Rational coeff(1);
    std::vector<std::string> num;
    std::vector<std::string> den;
    for (const auto& f : n.factors) {
        if (const auto* c = f.const_value()) {
            coeff *= *c;
        } else if (const auto* p = f.as<PowerNode>(); p && p->exponent.sign() < 0) {
            const Rational positive = -p->exponent;
            if (positive.is_one()) {
                std::string s = print(p->base);
                const auto k = p->base.kind();
                den.push_back(k == Expr::Kind::Sum || k == Expr::Kind::Product || k == Expr::Kind::Power ||
                                      starts_with_minus(s) || (p->base.const_value() && !p->base.const_value()->is_integer())
                                  ? paren(s)
                                  : s);
            } else {
                den.push_back(print_power(p->base, positive));
            }
        } else {
            num.push_back(mul_operand(f));
        }
    }
    if (coeff.is_zero()) return "0";
    std::string out = coeff.sign() < 0 ? "-" : "";
    const Rational mag = coeff.abs();
    std::string lead;
    for (std::size_t i = 0; i < num.size(); ++i) lead += (i ? "*" : "") + num[i];
    if (num.empty())
        out += mag.str();
    else if (mag.is_one())
        out += lead;
    else
        out += mag.str() + "*" + lead;
    for (const auto& d : den) out += "/" + d;
    return out;
}

std::string print_sum(const SumNode& n) {
    if (n.terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < n.terms.size(); ++i) {
        std::string s = print(n.terms[i]);
        if (n.terms[i].kind() == Expr::Kind::Sum) s = paren(s);
        if (i == 0)
            out = s;
        else if (starts_with_minus(s))
            out += " - " + s.substr(1);
        else
            out += " + " + s;
    }
    return out;
}

std::string print_funcsym(const FuncSymNode& n) {
    std::string out(funcsym_name(n.name));
    std::string suffix;
    for (std::size_t i = 0; i < n.args.size(); ++i)
        for (int k = 0; k < n.orders[i]; ++k) suffix += symbol_name(n.args[i]);
    if (!suffix.empty()) out += "_" + suffix;
    out += "(";
    for (std::size_t i = 0; i < n.args.size(); ++i) out += (i ? "," : "") + std::string(symbol_name(n.args[i]));
    return out + ")";
}

}  // namespace

std::string print(const Expr& e) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstNode>) return n.value.str();
            else if constexpr (std::is_same_v<T, NamedConstNode>) return std::string(named_constant_name(n.which));
            else if constexpr (std::is_same_v<T, VarNode>) return std::string(symbol_name(n.symbol));
            else if constexpr (std::is_same_v<T, SumNode>) return print_sum(n);
            else if constexpr (std::is_same_v<T, ProductNode>) return print_product(n);
            else if constexpr (std::is_same_v<T, PowerNode>) return print_power(n.base, n.exponent);
            else if constexpr (std::is_same_v<T, ApplyNode>) {
                std::string out = std::string(function_name(n.fn)) + "(";
                for (std::size_t i = 0; i < n.args.size(); ++i) out += (i ? "," : "") + print(n.args[i]);
                return out + ")";
            } else {
                return print_funcsym(n);
            }
        },
        e.node().v);
}

}  // namespace gsym
