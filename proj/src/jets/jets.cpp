#include "gsym/jets/jets.hpp"

#include "gsym/expr/diff.hpp"
#include "gsym/expr/io.hpp"
#include "gsym/expr/normal_form.hpp"

#include <stdexcept>

namespace gsym::jets {
namespace {

constexpr Symbol kDependent[] = {Symbol::u,     Symbol::u_x,   Symbol::u_t,   Symbol::u_xx,
                                 Symbol::u_xt,  Symbol::u_tt,  Symbol::u_xxx, Symbol::u_xxt,
                                 Symbol::u_xtt, Symbol::u_ttt};

constexpr Symbol kThirdOrder[] = {Symbol::u_xxx, Symbol::u_xxt, Symbol::u_xtt, Symbol::u_ttt};

Expr checked_normal(const Expr& e, const char* what) {
    Expr n = normalize(e);
    for (Symbol s : kThirdOrder)
        if (contains_symbol(n, s))
            throw std::logic_error(std::string("third-order jet survives in ") + what + ": " + print(n));
    return n;
}

}  // namespace

Expr total_derivative(const Expr& e, Direction dir, int max_order) {
    const Symbol base = dir == Direction::x ? Symbol::x : Symbol::t;
    Expr out = diff(e, base);
    for (Symbol s : kDependent) {
        if (!contains_symbol(e, s)) continue;
        JetOrder o = *jet_order(s);
        (dir == Direction::x ? o.nx : o.nt) += 1;
        const auto next = jet_symbol(o);
        if (!next || o.total() > max_order)
            throw OrderOverflow("total derivative of " + std::string(symbol_name(s)) + " exceeds jet order " +
                                std::to_string(max_order));
        out = out + Expr::var(*next) * diff(e, s);
    }
    return out;
}

VectorField operator+(const VectorField& v, const VectorField& w) {
    return {v.xi1 + w.xi1, v.xi2 + w.xi2, v.phi + w.phi, v.label.empty() || w.label.empty() ? "" : v.label + "+" + w.label};
}

VectorField operator-(const VectorField& v, const VectorField& w) {
    return {v.xi1 - w.xi1, v.xi2 - w.xi2, v.phi - w.phi, v.label.empty() || w.label.empty() ? "" : v.label + "-" + w.label};
}

VectorField operator*(const Rational& c, const VectorField& v) {
    return {Expr(c) * v.xi1, Expr(c) * v.xi2, Expr(c) * v.phi, v.label.empty() ? "" : c.str() + "*" + v.label};
}

VectorField normalized(const VectorField& v) { return {normalize(v.xi1), normalize(v.xi2), normalize(v.phi), v.label}; }

bool is_zero_field(const VectorField& v) {
    return is_zero_symbolic(v.xi1) && is_zero_symbolic(v.xi2) && is_zero_symbolic(v.phi);
}

bool same_field(const VectorField& v, const VectorField& w) { return is_zero_field(v - w); }

std::string describe(const VectorField& v) {
    std::string s;
    const auto part = [&](const Expr& c, const char* d) {
        Expr n = normalize(c);
        if (n.is_zero()) return;
        if (!s.empty()) s += " + ";
        s += "(" + print(n) + ")*" + d;
    };
    part(v.xi1, "d_x");
    part(v.xi2, "d_t");
    part(v.phi, "d_u");
    return s.empty() ? "0" : s;
}

Expr apply_field(const VectorField& v, const Expr& f) {
    return v.xi1 * diff(f, Symbol::x) + v.xi2 * diff(f, Symbol::t) + v.phi * diff(f, Symbol::u);
}

Expr characteristic(const VectorField& v) {
    return v.phi - v.xi1 * Expr::var(Symbol::u_x) - v.xi2 * Expr::var(Symbol::u_t);
}

ProlongedField prolong2(const VectorField& v) {
    const Expr q = characteristic(v);
    const Expr qx = total_derivative(q, Direction::x);
    const Expr qt = total_derivative(q, Direction::t);
    const auto var = [](Symbol s) { return Expr::var(s); };

    ProlongedField p;
    p.base = v;
    p.phi_x = checked_normal(qx + v.xi1 * var(Symbol::u_xx) + v.xi2 * var(Symbol::u_xt), "phi^x");
    p.phi_t = checked_normal(qt + v.xi1 * var(Symbol::u_xt) + v.xi2 * var(Symbol::u_tt), "phi^t");
    p.phi_xx = checked_normal(
        total_derivative(qx, Direction::x) + v.xi1 * var(Symbol::u_xxx) + v.xi2 * var(Symbol::u_xxt), "phi^xx");
    p.phi_xt = checked_normal(
        total_derivative(qt, Direction::x) + v.xi1 * var(Symbol::u_xxt) + v.xi2 * var(Symbol::u_xtt), "phi^xt");
    p.phi_tt = checked_normal(
        total_derivative(qt, Direction::t) + v.xi1 * var(Symbol::u_xtt) + v.xi2 * var(Symbol::u_ttt), "phi^tt");
    return p;
}

Expr apply_prolonged(const ProlongedField& p, const Expr& e) {
    const VectorField& v = p.base;
    return normalize(apply_field(v, e) + p.phi_x * diff(e, Symbol::u_x) + p.phi_t * diff(e, Symbol::u_t) +
                     p.phi_xx * diff(e, Symbol::u_xx) + p.phi_xt * diff(e, Symbol::u_xt) +
                     p.phi_tt * diff(e, Symbol::u_tt));
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
    VectorField out{apply_field(v, w.xi1) - apply_field(w, v.xi1), apply_field(v, w.xi2) - apply_field(w, v.xi2),
                    apply_field(v, w.phi) - apply_field(w, v.phi),
                    v.label.empty() || w.label.empty() ? "" : "[" + v.label + "," + w.label + "]"};
    return normalized(out);
}

}  // namespace gsym::jets
