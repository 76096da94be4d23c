#include "support.hpp"

#include "gsym/model/gs_equation.hpp"
#include "gsym/model/generators.hpp"

#include <doctest.h>

using namespace gsym;
using namespace gsym::model;
using testing::P;
using testing::same;

TEST_CASE("equation construction") {
    const GSEquation eq = GSEquation::grad_shafranov();
    CHECK(eq.describe() == "GS(-1,2,1,0)");
    CHECK(same(gs_delta(eq), P("u_xx - u_x/x + u_tt - x^2")));
    CHECK(same(u_tt_on_shell(eq), P("x^2 - u_xx + u_x/x")));
    CHECK_THROWS_AS(GSEquation::from_text("0", "0", "1", "0"), InvalidEquation);
    CHECK_THROWS_AS(GSEquation::from_text("0", "2", "0", "u"), InvalidEquation);
    CHECK_THROWS_AS(GSEquation::from_text("-1", "2", "x*u", "0"), InvalidEquation);
    CHECK_NOTHROW(GSEquation::from_text("1", "0", "u^2", "exp(u)"));
}

TEST_CASE("generators are symmetries with symbolic proofs") {
    const GSEquation eq = GSEquation::grad_shafranov();
    for (const auto& v : finite_generators()) {
        CAPTURE(v.label);
        CHECK(std::holds_alternative<ProvenZero>(is_symmetry(v, eq).verdict));
    }
    for (const auto& c : x5_instances()) CHECK(std::holds_alternative<ProvenZero>(is_symmetry(c.field, c.equation).verdict));
    for (const auto& c : special_cases()) {
        CAPTURE(c.name);
        CHECK(std::holds_alternative<ProvenZero>(is_symmetry(c.field, c.equation).verdict));
    }
}

TEST_CASE("non-symmetries are rejected") {
    const GSEquation eq = GSEquation::grad_shafranov();
    const jets::VectorField dx{Expr(1), Expr(0), Expr(0), "d_x"};
    const auto r = is_symmetry(dx, eq);
    CHECK(std::holds_alternative<NonZero>(r.verdict));
    CHECK(same(r.residual, P("u_x/x^2 - 2*x")));

    // The exponential scaling is not a symmetry of the basic equation.
    const jets::VectorField s{P("x"), P("t"), Expr(-2), "s"};
    CHECK_FALSE(is_symmetry(s, eq).accepted());
    // X2 fails once G is switched on.
    CHECK_FALSE(is_symmetry(X2(), GSEquation::from_text("-1", "2", "1", "u")).accepted());
}

TEST_CASE("X5 reduces to a linear constraint") {
    const GSEquation eq = GSEquation::grad_shafranov();
    CHECK(same(constraint_for_function_symbol(X5_symbolic(), eq), P("psi_xx(x,t) + psi_tt(x,t) - psi_x(x,t)/x")));
    const auto linear = GSEquation::from_text("-1", "2", "1", "u");
    CHECK(same(constraint_for_function_symbol(X5_symbolic(), linear),
               P("psi_xx(x,t) + psi_tt(x,t) - psi_x(x,t)/x - psi(x,t)")));
    const jets::VectorField two{P("psi(x,t)"), P("phi(x,t,u)"), Expr(0), ""};
    CHECK_THROWS_AS(constraint_for_function_symbol(two, eq), MultipleFuncSyms);
}

TEST_CASE("determining system of the basic equation") {
    const GSEquation eq = GSEquation::grad_shafranov();
    const auto sys = determining_system(eq);
    REQUIRE(sys.size() >= 10);
    bool saw_xx = false, saw_xt = false;
    for (const auto& d : sys) {
        if (d.monomial == JetExponents{0, 0, 1, 0}) {
            saw_xx = true;
            CHECK(same(d.coefficient, P("2*xi2_t(x,t,u) - 2*xi1_x(x,t,u)")));
        }
        if (d.monomial == JetExponents{0, 0, 0, 1}) {
            saw_xt = true;
            CHECK(same(d.coefficient, P("-2*xi1_t(x,t,u) - 2*xi2_x(x,t,u)")));
        }
        for (const auto& v : finite_generators()) CHECK(is_zero_symbolic(substitute_field(d.coefficient, v)));
        CHECK(is_zero_symbolic(substitute_field(d.coefficient, X5(P("x^2*t")))));
    }
    CHECK(saw_xx);
    CHECK(saw_xt);
    // d_x is not a solution of the system.
    const jets::VectorField dx{Expr(1), Expr(0), Expr(0), ""};
    bool some_nonzero = false;
    for (const auto& d : sys) some_nonzero |= !is_zero_symbolic(substitute_field(d.coefficient, dx));
    CHECK(some_nonzero);
}

TEST_CASE("the generic residual reproduces the residual of a concrete field") {
    const GSEquation eq = GSEquation::grad_shafranov();
    const jets::VectorField v{P("x*t"), P("u"), P("x^2*u"), ""};
    Expr total = 0;
    for (const auto& d : determining_system(eq)) {
        Expr m = 1;
        const Symbol syms[4] = {Symbol::u_x, Symbol::u_t, Symbol::u_xx, Symbol::u_xt};
        for (int k = 0; k < 4; ++k) m = m * pow(Expr(syms[k]), Rational(d.monomial[k]));
        total = total + m * substitute_field(d.coefficient, v);
    }
    CHECK(same(total, symmetry_residual(v, eq)));
}

TEST_CASE("invariants are annihilated") {
    const auto cat = invariant_catalog();
    CHECK(cat.size() == 8);
    for (const auto& c : cat) {
        CAPTURE(c.name);
        CHECK(std::holds_alternative<ProvenZero>(verify_invariant(c.field, c.invariant)));
    }
    CHECK(std::holds_alternative<NonZero>(verify_invariant(X1(), P("t"))));
    CHECK_THROWS_AS(verify_invariant(X1(), P("u_x")), InvalidEquation);
}
