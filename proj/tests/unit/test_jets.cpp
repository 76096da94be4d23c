#include "support.hpp"

#include "gsym/jets/jets.hpp"
#include "gsym/model/generators.hpp"

#include <doctest.h>

using namespace gsym;
using namespace gsym::jets;
using testing::P;
using testing::same;

namespace {

VectorField field(const std::string& a, const std::string& b, const std::string& c) {
    return {P(a), P(b), P(c), ""};
}

}  // namespace

TEST_CASE("total derivatives") {
    CHECK(same(total_derivative(P("x*u"), Direction::x), P("u + x*u_x")));
    CHECK(same(total_derivative(P("u_x"), Direction::t), P("u_xt")));
    CHECK(same(total_derivative(P("u_t^2"), Direction::t), P("2*u_t*u_tt")));
    CHECK(same(total_derivative(P("phi(x,t,u)"), Direction::x), P("phi_x(x,t,u) + phi_u(x,t,u)*u_x")));
    CHECK(same(total_derivative(P("psi(x,t)"), Direction::t), P("psi_t(x,t)")));
    CHECK_THROWS_AS(total_derivative(P("u_xx"), Direction::t, 2), OrderOverflow);
    CHECK_THROWS_AS(total_derivative(P("u_ttt"), Direction::t), OrderOverflow);
}

TEST_CASE("total derivatives commute") {
    for (const char* s : {"x^2*u*u_t", "exp(u)*t + u_x", "phi(x,t,u)*u_x"}) {
        const Expr e = P(s);
        CHECK(same(total_derivative(total_derivative(e, Direction::x), Direction::t),
                   total_derivative(total_derivative(e, Direction::t), Direction::x)));
    }
}

TEST_CASE("prolongation of simple fields") {
    const auto dt = prolong2(field("0", "1", "0"));
    CHECK(is_zero_symbolic(dt.phi_x));
    CHECK(is_zero_symbolic(dt.phi_tt));

    const auto scale = prolong2(field("x", "t", "0"));
    CHECK(same(scale.phi_x, P("-u_x")));
    CHECK(same(scale.phi_xx, P("-2*u_xx")));
    CHECK(same(scale.phi_xt, P("-2*u_xt")));

    const auto du = prolong2(field("0", "0", "u"));
    CHECK(same(du.phi_xx, P("u_xx")));
    CHECK(same(du.phi_t, P("u_t")));
}

TEST_CASE("zero field and third-order cancellation") {
    const VectorField zero = field("0", "0", "0");
    CHECK(is_zero_symbolic(characteristic(zero)));
    const auto pz = prolong2(zero);
    for (const Expr& e : {pz.phi_x, pz.phi_t, pz.phi_xx, pz.phi_xt, pz.phi_tt}) CHECK(is_zero_symbolic(e));
    for (const auto& v : model::finite_generators()) CHECK_NOTHROW(prolong2(v));
    CHECK_NOTHROW(prolong2(model::X5_symbolic()));
    CHECK_NOTHROW(prolong2(field("u^2*x", "exp(u)*t", "u^3")));
}

TEST_CASE("prolongation is linear") {
    const VectorField v = field("x*t", "t^2 - x^2", "u*t + x^3");
    const VectorField w = field("u", "x", "t*u^2");
    const auto pv = prolong2(v);
    const auto pw = prolong2(w);
    const auto ps = prolong2(v + Rational(3) * w);
    CHECK(same(ps.phi_x, pv.phi_x + 3 * pw.phi_x));
    CHECK(same(ps.phi_xx, pv.phi_xx + 3 * pw.phi_xx));
    CHECK(same(ps.phi_xt, pv.phi_xt + 3 * pw.phi_xt));
    CHECK(same(ps.phi_tt, pv.phi_tt + 3 * pw.phi_tt));
}

TEST_CASE("vector field helpers") {
    const VectorField v = field("x", "t", "1/2*x^4");
    CHECK(same(apply_field(v, P("u - x^4/8")), P("0")));
    CHECK(same(characteristic(v), P("1/2*x^4 - x*u_x - t*u_t")));
    CHECK(is_zero_field(v - v));
    CHECK(same_field(Rational(2) * v, v + v));
    CHECK(describe(field("0", "1", "0")) == "(1)*d_t");
}

TEST_CASE("brackets are antisymmetric and satisfy Jacobi") {
    const auto g = model::finite_generators();
    const VectorField extra = field("u", "x*t", "x");
    std::vector<VectorField> fs(g.begin(), g.end());
    fs.push_back(extra);
    for (const auto& a : fs)
        for (const auto& b : fs) CHECK(is_zero_field(lie_bracket(a, b) + lie_bracket(b, a)));
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            for (std::size_t k = j + 1; k < fs.size(); ++k) {
                const auto& a = fs[i];
                const auto& b = fs[j];
                const auto& c = fs[k];
                CHECK(is_zero_field(lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                                    lie_bracket(c, lie_bracket(a, b))));
            }
}

TEST_CASE("bracket agrees with the commutator of derivations") {
    const VectorField v = field("x*t", "t^2", "u*x");
    const VectorField w = field("u", "1", "t");
    const Expr f = P("x^2*u + exp(t)*u^2");
    const Expr lhs = apply_field(lie_bracket(v, w), f);
    const Expr rhs = apply_field(v, apply_field(w, f)) - apply_field(w, apply_field(v, f));
    CHECK(same(lhs, rhs));
}
