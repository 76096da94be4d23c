#pragma once

#include "gsym/expr/errors.hpp"
#include "gsym/expr/expression.hpp"

#include <string>

namespace gsym::jets {

enum class Direction { x, t };

class OrderOverflow : public Error {
public:
    using Error::Error;
};

/// Total derivative D_x or D_t on the jet space. u_J maps to u_{J,dir};
/// function symbols depending on u pick up the chain-rule factor.
/// Throws OrderOverflow if a jet coordinate of order > max_order would be
/// created (the alphabet stops at order 3).
Expr total_derivative(const Expr& e, Direction dir, int max_order = 3);

/// X = xi1 d/dx + xi2 d/dt + phi d/du, with coefficients in (x, t, u).
struct VectorField {
    Expr xi1;
    Expr xi2;
    Expr phi;
    std::string label;
};

VectorField operator+(const VectorField& v, const VectorField& w);
VectorField operator-(const VectorField& v, const VectorField& w);
VectorField operator*(const Rational& c, const VectorField& v);
/// Componentwise normal form.
VectorField normalized(const VectorField& v);
bool is_zero_field(const VectorField& v);
/// Component-wise equality of normal forms.
bool same_field(const VectorField& v, const VectorField& w);
std::string describe(const VectorField& v);

/// V(f) = xi1 f_x + xi2 f_t + phi f_u.
Expr apply_field(const VectorField& v, const Expr& f);

/// Q = phi - xi1 u_x - xi2 u_t.
Expr characteristic(const VectorField& v);

struct ProlongedField {
    VectorField base;
    Expr phi_x;
    Expr phi_t;
    Expr phi_xx;
    Expr phi_xt;
    Expr phi_tt;
};

/// Second prolongation from D-derivatives of the characteristic plus the
/// xi correction terms. Coefficients are normalized; a surviving third-order
/// jet throws std::logic_error.
ProlongedField prolong2(const VectorField& v);

/// pr2 X applied to a function on the second-order jet space.
Expr apply_prolonged(const ProlongedField& p, const Expr& e);

/// [V, W] with components V(W.c) - W(V.c), normalized.
VectorField lie_bracket(const VectorField& v, const VectorField& w);

}  // namespace gsym::jets
