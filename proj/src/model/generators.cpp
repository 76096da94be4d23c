#include "gsym/model/generators.hpp"

#include "gsym/expr/io.hpp"

namespace gsym::model {
namespace {

jets::VectorField field(const char* xi1, const char* xi2, const char* phi, std::string label) {
    return {parse(xi1), parse(xi2), parse(phi), std::move(label)};
}

}  // namespace

jets::VectorField X1() { return field("0", "1", "0", "X1"); }
jets::VectorField X2() { return field("x", "t", "x^4/2", "X2"); }
jets::VectorField X3() { return field("0", "0", "u - x^4/8", "X3"); }
jets::VectorField X4() { return field("t*x", "(t^2 - x^2)/2", "t*(7*x^4 + 8*u)/16", "X4"); }

jets::VectorField X5(const Expr& psi) { return {Expr(0), Expr(0), psi, "X5[" + print(psi) + "]"}; }

jets::VectorField X5_symbolic() { return X5(parse("psi(x,t)")); }

std::vector<jets::VectorField> finite_generators() { return {X1(), X2(), X3(), X4()}; }

std::vector<SymmetryCase> special_cases() {
    std::vector<SymmetryCase> out;
    out.push_back({"scaling, F = exp(2u), G = exp(u)", GSEquation::from_text("-1", "2", "exp(2*u)", "exp(u)"),
                   field("x", "t", "-2", "x*d_x + t*d_t - 2*d_u")});
    for (int q : {1, -2, 3}) {
        const Rational f = Rational(1) + Rational(2, q);
        const Rational g = Rational(1) + Rational(1, q);
        const std::string qs = std::to_string(q);
        out.push_back({"scaling, q = " + qs,
                       GSEquation(Rational(-1), Rational(2), pow(Expr(Symbol::u), f), pow(Expr(Symbol::u), g)),
                       {parse("x"), parse("t"), parse(std::to_string(-2 * q) + "*u"),
                        "x*d_x + t*d_t - 2*(" + qs + ")*u*d_u"}});
    }
    out.push_back({"F = 1, G = u", GSEquation::from_text("-1", "2", "1", "u"), field("0", "0", "x^2 + u", "(x^2+u)*d_u")});
    return out;
}

std::vector<SymmetryCase> x5_instances() {
    std::vector<SymmetryCase> out;
    for (const char* psi : {"t", "x^2", "x^2*t"}) out.push_back({std::string("X5, psi = ") + psi, GSEquation::grad_shafranov(), X5(parse(psi))});
    return out;
}

std::vector<InvariantCase> invariant_catalog() {
    const jets::VectorField x2x3 = X2() + X3();
    const jets::VectorField x1x3 = X1() + X3();
    return {
        {"X2: t/x", X2(), parse("t/x")},
        {"X2: u - x^4/8", X2(), parse("-1/8*x^4 + u")},
        {"X4: (t^2+x^2)/x", X4(), parse("(t^2 + x^2)/x")},
        {"X4: (8u-x^4)/(8 sqrt(x))", X4(), parse("(8*u - x^4)/(8*sqrt(x))")},
        {"X2+X3: t/x", x2x3, parse("t/x")},
        {"X2+X3: (8u-x^4)/(8x)", x2x3, parse("(8*u - x^4)/(8*x)")},
        {"X1+X3: x", x1x3, parse("x")},
        {"X1+X3: -(x^4-8u) exp(-t)/8", x1x3, parse("-1/8*(x^4 - 8*u)*exp(-t)")},
    };
}

}  // namespace gsym::model
