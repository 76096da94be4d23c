#pragma once

#include "gsym/jets/jets.hpp"
#include "gsym/model/gs_equation.hpp"

#include <string>
#include <vector>

namespace gsym::model {

/// d_t
jets::VectorField X1();
/// x d_x + t d_t + x^4/2 d_u
jets::VectorField X2();
/// (u - x^4/8) d_u
jets::VectorField X3();
/// t x d_x + (t^2 - x^2)/2 d_t + t (7 x^4 + 8 u)/16 d_u
jets::VectorField X4();
/// psi d_u for a concrete psi or a function symbol.
jets::VectorField X5(const Expr& psi);
jets::VectorField X5_symbolic();

/// X1..X4 in order.
std::vector<jets::VectorField> finite_generators();

struct SymmetryCase {
    std::string name;
    GSEquation equation;
    jets::VectorField field;
};

/// Symmetries the basic equation gains for special (F, G): scalings for
/// exponential and power nonlinearities, and the linear cases F = 1, G = u.
std::vector<SymmetryCase> special_cases();

/// X5 instances psi in {t, x^2, x^2 t} on the basic equation.
std::vector<SymmetryCase> x5_instances();

struct InvariantCase {
    std::string name;
    jets::VectorField field;
    Expr invariant;
};

/// Pairs of invariants listed for X2, X4, X2 + X3 and X1 + X3.
std::vector<InvariantCase> invariant_catalog();

}  // namespace gsym::model
