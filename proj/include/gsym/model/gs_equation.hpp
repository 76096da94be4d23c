#pragma once

#include "gsym/expr/equiv.hpp"
#include "gsym/expr/errors.hpp"
#include "gsym/jets/jets.hpp"

#include <array>
#include <string>
#include <vector>

namespace gsym::model {

class InvalidEquation : public Error {
public:
    using Error::Error;
};

class MultipleFuncSyms : public Error {
public:
    using Error::Error;
};

/// u_xx + (a/x) u_x + u_tt = x^p F(u) + G(u).
class GSEquation {
public:
    /// Throws InvalidEquation for a = 0 with p = 0 or F = 0, and for F, G
    /// depending on anything but u.
    GSEquation(Rational a, Rational p, Expr F, Expr G);

    /// Parses F and G.
    static GSEquation from_text(const std::string& a, const std::string& p, const std::string& F,
                                const std::string& G);

    /// a = -1, p = 2, F = 1, G = 0.
    static GSEquation grad_shafranov();

    const Rational& a() const { return a_; }
    const Rational& p() const { return p_; }
    const Expr& F() const { return F_; }
    const Expr& G() const { return G_; }

    /// "GS(a,p,F,G)".
    std::string describe() const;

private:
    Rational a_;
    Rational p_;
    Expr F_;
    Expr G_;
};

/// Delta = u_xx + (a/x) u_x + u_tt - x^p F(u) - G(u).
Expr gs_delta(const GSEquation& eq);

/// x^p F(u) + G(u) - u_xx - (a/x) u_x, the value of u_tt on solutions.
Expr u_tt_on_shell(const GSEquation& eq);

/// Substitutes u_tt by its on-shell value and normalizes.
Expr on_shell_reduce(const Expr& e, const GSEquation& eq);

struct SymmetryReport {
    jets::VectorField field;
    GSEquation equation;
    Expr residual;
    EquivVerdict verdict;

    bool accepted() const { return gsym::accepted(verdict); }
};

/// pr2 V applied to Delta, on shell and normalized.
Expr symmetry_residual(const jets::VectorField& v, const GSEquation& eq);

/// Residual of pr2 V applied to Delta, taken on shell. Symbolic zero gives
/// ProvenZero; otherwise the residual is sampled, which needs callbacks when
/// function symbols remain (UnresolvedFuncSym otherwise).
SymmetryReport is_symmetry(const jets::VectorField& v, const GSEquation& eq, const EquivOptions& options = {});

/// Exponents of (u_x, u_t, u_xx, u_xt).
using JetExponents = std::array<int, 4>;

struct DeterminingEquation {
    JetExponents monomial;
    Expr coefficient;

    std::string monomial_text() const;
};

/// Generic field with xi1(x,t,u), xi2(x,t,u), phi(x,t,u); the on-shell
/// residual is collected by monomials in (u_x, u_t, u_xx, u_xt), ordered by
/// total degree and then lexicographically (u_x first).
std::vector<DeterminingEquation> determining_system(const GSEquation& eq);

/// xi1 -> V.xi1, xi2 -> V.xi2, phi -> V.phi (with all derivatives), normalized.
Expr substitute_field(const Expr& e, const jets::VectorField& v);

/// The generic field used by determining_system.
jets::VectorField generic_field();

/// On-shell residual of a field carrying exactly one function symbol: the PDE
/// that symbol must satisfy. Throws MultipleFuncSyms otherwise.
Expr constraint_for_function_symbol(const jets::VectorField& v, const GSEquation& eq);

/// Verdict on xi1 I_x + xi2 I_t + phi I_u == 0. Throws InvalidEquation if I
/// contains jet coordinates.
EquivVerdict verify_invariant(const jets::VectorField& v, const Expr& invariant, const EquivOptions& options = {});

}  // namespace gsym::model
