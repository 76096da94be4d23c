#include "gsym/model/gs_equation.hpp"

#include "gsym/expr/io.hpp"
#include "gsym/expr/normal_form.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gsym::model {
namespace {

Expr var(Symbol s) { return Expr::var(s); }

bool only_u(const Expr& e) {
    const auto syms = free_symbols(e);
    return std::all_of(syms.begin(), syms.end(), [](Symbol s) { return s == Symbol::u; });
}

Expr x_power(const Rational& p) { return p.is_zero() ? Expr(1) : Expr::power(var(Symbol::x), p); }

constexpr Symbol kJetBasis[] = {Symbol::u_x, Symbol::u_t, Symbol::u_xx, Symbol::u_xt};

}  // namespace

GSEquation::GSEquation(Rational a, Rational p, Expr F, Expr G)
    : a_(std::move(a)), p_(std::move(p)), F_(std::move(F)), G_(std::move(G)) {
    if (!only_u(F_) || !only_u(G_)) throw InvalidEquation("F and G may depend on u only");
    if (a_.is_zero() && p_.is_zero())
        throw InvalidEquation("a = 0 with p = 0 is the nonlinear Laplace equation and is excluded");
    if (a_.is_zero() && is_zero_symbolic(F_))
        throw InvalidEquation("a = 0 with F = 0 is the nonlinear Laplace equation and is excluded");
}

GSEquation GSEquation::from_text(const std::string& a, const std::string& p, const std::string& F,
                                 const std::string& G) {
    return GSEquation(Rational::from_string(a), Rational::from_string(p), parse(F), parse(G));
}

GSEquation GSEquation::grad_shafranov() { return GSEquation(Rational(-1), Rational(2), Expr(1), Expr(0)); }

std::string GSEquation::describe() const {
    return "GS(" + a_.str() + "," + p_.str() + "," + print(F_) + "," + print(G_) + ")";
}

Expr gs_delta(const GSEquation& eq) {
    const Expr x = var(Symbol::x);
    return var(Symbol::u_xx) + Expr(eq.a()) / x * var(Symbol::u_x) + var(Symbol::u_tt) - x_power(eq.p()) * eq.F() -
           eq.G();
}

Expr u_tt_on_shell(const GSEquation& eq) {
    const Expr x = var(Symbol::x);
    return x_power(eq.p()) * eq.F() + eq.G() - var(Symbol::u_xx) - Expr(eq.a()) / x * var(Symbol::u_x);
}

Expr on_shell_reduce(const Expr& e, const GSEquation& eq) {
    return normalize(substitute(e, Symbol::u_tt, u_tt_on_shell(eq)));
}

Expr symmetry_residual(const jets::VectorField& v, const GSEquation& eq) {
    return on_shell_reduce(jets::apply_prolonged(jets::prolong2(v), gs_delta(eq)), eq);
}

SymmetryReport is_symmetry(const jets::VectorField& v, const GSEquation& eq, const EquivOptions& options) {
    const Expr residual = symmetry_residual(v, eq);
    if (residual.is_zero()) return {v, eq, residual, ProvenZero{}};
    return {v, eq, residual, equiv_numeric(residual, Expr(0), options)};
}

std::string DeterminingEquation::monomial_text() const {
    std::string s;
    for (std::size_t i = 0; i < monomial.size(); ++i) {
        if (monomial[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += symbol_name(kJetBasis[i]);
        if (monomial[i] > 1) s += "^" + std::to_string(monomial[i]);
    }
    return s.empty() ? "1" : s;
}

jets::VectorField generic_field() {
    const std::vector<Symbol> args{Symbol::x, Symbol::t, Symbol::u};
    return {Expr::funcsym(FuncSymbol::xi1, args), Expr::funcsym(FuncSymbol::xi2, args),
            Expr::funcsym(FuncSymbol::phi, args), "X"};
}

std::vector<DeterminingEquation> determining_system(const GSEquation& eq) {
    const Expr residual = symmetry_residual(generic_field(), eq);
    const nf::RatFunc r = nf::to_ratfunc(residual);
    for (const auto& [m, c] : r.den())
        for (const auto& [atom, e] : m)
            if (atom.kind() == nf::AtomKind::Var && is_jet(atom.data().symbol))
                throw std::logic_error("determining system: jet coordinate in a denominator");

    const auto by_degree = [](const JetExponents& a, const JetExponents& b) {
        const int da = a[0] + a[1] + a[2] + a[3];
        const int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da < db;
        return a > b;
    };
    std::map<JetExponents, nf::Poly, decltype(by_degree)> groups(by_degree);
    for (const auto& [m, c] : r.num()) {
        JetExponents key{0, 0, 0, 0};
        nf::Monomial rest;
        for (const auto& [atom, e] : m) {
            bool jet = false;
            if (atom.kind() == nf::AtomKind::Var) {
                for (std::size_t i = 0; i < 4; ++i) {
                    if (atom.data().symbol == kJetBasis[i]) {
                        if (!e.is_integer() || e.sign() < 0)
                            throw std::logic_error("determining system: non-polynomial jet dependence");
                        key[i] = static_cast<int>(*e.to_long());
                        jet = true;
                    }
                }
                if (!jet && is_jet(atom.data().symbol))
                    throw std::logic_error("determining system: unexpected jet " +
                                           std::string(symbol_name(atom.data().symbol)));
            }
            if (!jet) rest.emplace_back(atom, e);
        }
        groups[key].emplace(std::move(rest), c);
    }

    const Expr den = nf::poly_to_expr(r.den());
    std::vector<DeterminingEquation> out;
    for (const auto& [key, poly] : groups) {
        Expr coefficient = nf::poly_to_expr(poly);
        if (!r.den_is_one()) coefficient = normalize(coefficient / den);
        out.push_back({key, coefficient});
    }
    return out;
}

Expr substitute_field(const Expr& e, const jets::VectorField& v) {
    Expr out = substitute_funcsym(e, FuncSymbol::xi1, v.xi1);
    out = substitute_funcsym(out, FuncSymbol::xi2, v.xi2);
    out = substitute_funcsym(out, FuncSymbol::phi, v.phi);
    return normalize(out);
}

Expr constraint_for_function_symbol(const jets::VectorField& v, const GSEquation& eq) {
    std::set<FuncSymbol> names = funcsyms(v.xi1);
    for (const Expr* c : {&v.xi2, &v.phi})
        for (FuncSymbol f : funcsyms(*c)) names.insert(f);
    if (names.size() != 1)
        throw MultipleFuncSyms("expected exactly one function symbol in the field, found " +
                               std::to_string(names.size()));
    return symmetry_residual(v, eq);
}

EquivVerdict verify_invariant(const jets::VectorField& v, const Expr& invariant, const EquivOptions& options) {
    for (Symbol s : free_symbols(invariant))
        if (is_jet(s)) throw InvalidEquation("invariant must not contain jet coordinates");
    return equiv(jets::apply_field(v, invariant), Expr(0), options);
}

}  // namespace gsym::model
