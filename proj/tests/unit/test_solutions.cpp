#include "support.hpp"

#include "gsym/solutions/catalog.hpp"

#include <doctest.h>

#include <cmath>

using namespace gsym;
using namespace gsym::solutions;
using testing::P;
using testing::same;

TEST_CASE("catalog layout") {
    const auto& c = catalog();
    CHECK(c.size() == 8);
    CHECK(find("S5p").expected == Expected::Fail);
    CHECK(find("S4").expected == Expected::Pass);
    CHECK_THROWS_AS(find("S9"), std::out_of_range);
}

TEST_CASE("symbolic residuals") {
    CHECK(is_zero_symbolic(symbolic_residual(find("S4"))));
    CHECK(is_zero_symbolic(symbolic_residual(find("S5c"))));
    CHECK(is_zero_symbolic(symbolic_residual(find("S6"))));
    CHECK(same(symbolic_residual(find("S5p")), P("7*x^2")));
}

TEST_CASE("pointwise residual against a finite-difference oracle") {
    // Delta[u] = u_xx - u_x/x + u_tt - x^2 F(u) - G(u) by central differences.
    const auto& s = find("S4");
    const Bindings base{{Symbol::C1, 0.7}, {Symbol::C2, -1.3}};
    const auto u = [&](double x, double t) {
        Bindings b = base;
        b[Symbol::x] = x;
        b[Symbol::t] = t;
        return eval_num(s.closed_form, b);
    };
    const double h = 1e-4;
    for (double x : {0.8, 1.7, 2.6}) {
        for (double t : {-1.0, 0.4}) {
            const double uxx = (u(x + h, t) - 2 * u(x, t) + u(x - h, t)) / (h * h);
            const double utt = (u(x, t + h) - 2 * u(x, t) + u(x, t - h)) / (h * h);
            const double ux = (u(x + h, t) - u(x - h, t)) / (2 * h);
            const double fd = uxx - ux / x + utt - x * x;
            CHECK(std::abs(fd) < 1e-5 * (1 + std::abs(u(x, t))));
            CHECK(std::abs(residual(s, x, t, 0.7, -1.3)) < 1e-12);
        }
    }
    CHECK(residual(find("S5p"), 2.0, 0.0, 0.3, 0.1) == doctest::Approx(28.0));
}

TEST_CASE("verify every entry") {
    for (const auto& s : catalog()) {
        CAPTURE(s.id);
        const auto r = verify_solution(s, 1, 100, 1e-9);
        CHECK(r.points == 100);
        CHECK(r.matches);
        if (s.expected == Expected::Pass) {
            CHECK(r.pass);
            CHECK(r.max_abs_residual < 1e-8);
        } else {
            CHECK_FALSE(r.pass);
            CHECK(r.witness.has_value());
        }
    }
    CHECK(verify_solution(find("S5c"), 1, 100, 1e-9).proven_zero);
}

TEST_CASE("verification is deterministic for a seed") {
    const auto a = verify_solution(find("S7"), 42, 50, 1e-9);
    const auto b = verify_solution(find("S7"), 42, 50, 1e-9);
    CHECK(a.max_abs_residual == b.max_abs_residual);
}
