#include "support.hpp"

#include "gsym/lie/algebra.hpp"
#include "gsym/model/generators.hpp"

#include <doctest.h>

using namespace gsym;
using namespace gsym::lie;

namespace {

const LieAlgebra& algebra() {
    static const LieAlgebra L = from_vector_fields(model::finite_generators());
    return L;
}

Vec V(std::initializer_list<Rational> xs) { return Vec(xs); }

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(num(rng), den(rng)));
    return v;
}

}  // namespace

TEST_CASE("matrix basics") {
    const Matrix m = Matrix::from_rows({V({1, 2, 3}), V({2, 4, 6}), V({1, 0, 1})}, 3);
    CHECK(m.rank() == 2);
    CHECK(m.det().is_zero());
    const auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(m * ns[0]));
    CHECK(m.solve(V({1, 2, 1})).has_value());
    CHECK_FALSE(m.solve(V({1, 0, 0})).has_value());

    const Matrix a = Matrix::from_rows({V({2, 1}), V({Rational(1, 2), 3})}, 2);
    CHECK(a.det() == Rational(11, 2));
    CHECK(a.transpose().transpose() == a);
    CHECK((Matrix::identity(2) * a) == a);
    CHECK(a.trace() == Rational(5));
}

TEST_CASE("subspaces") {
    const Subspace s = Subspace::span({V({1, 1, 0}), V({2, 2, 0}), V({0, 1, 1})}, 3);
    CHECK(s.dim() == 2);
    CHECK(s.contains(V({1, 2, 1})));
    CHECK_FALSE(s.contains(V({0, 0, 1})));
    const Subspace t = Subspace::span({V({0, 0, 1})}, 3);
    CHECK(sum(s, t) == Subspace::whole(3));
    CHECK(intersection(s, t).dim() == 0);
    CHECK(combination(V({0, 1, Rational(1, 2)}), {"A", "B", "C"}) == "B + 1/2*C");
    CHECK(*s.coordinates(V({1, 2, 1})) == V({1, 2}));  // reduced basis (1,0,-1), (0,1,1)
}

TEST_CASE("structure constants of the symmetry algebra") {
    const LieAlgebra& L = algebra();
    REQUIRE(L.dim() == 4);
    // Brackets worked out by hand from the coefficient fields.
    CHECK(L.c(0, 1) == V({1, 0, 0, 0}));
    CHECK(L.c(0, 2) == V({0, 0, 0, 0}));
    CHECK(L.c(0, 3) == V({0, 1, Rational(1, 2), 0}));
    CHECK(L.c(1, 2) == V({0, 0, 0, 0}));
    CHECK(L.c(1, 3) == V({0, 0, 0, 1}));
    CHECK(L.c(2, 3) == V({0, 0, 0, 0}));
    const auto fs = model::finite_generators();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            jets::VectorField expect{Expr(0), Expr(0), Expr(0), ""};
            for (std::size_t k = 0; k < 4; ++k) expect = expect + L.c(i, j)[k] * fs[k];
            CHECK(jets::same_field(jets::lie_bracket(fs[i], fs[j]), expect));
        }
    }
}

TEST_CASE("closure and independence failures") {
    const jets::VectorField dx{Expr(1), Expr(0), Expr(0), "Dx"};
    const jets::VectorField xdx{Expr(Symbol::x), Expr(0), Expr(0), "xDx"};
    const jets::VectorField x2dx{pow(Expr(Symbol::x), Rational(2)), Expr(0), Expr(0), "x2Dx"};
    CHECK_NOTHROW(from_vector_fields({dx, xdx, x2dx}));
    CHECK_THROWS_AS(from_vector_fields({dx, x2dx}), NotClosed);
    CHECK_THROWS_AS(from_vector_fields({dx, Rational(2) * dx}), InvalidAlgebra);
}

TEST_CASE("invalid structure constants are rejected") {
    StructureConstants c(2, std::vector<Vec>(2, zero_vec(2)));
    c[0][1] = V({1, 0});
    CHECK_THROWS_AS(LieAlgebra({"A", "B"}, c), InvalidAlgebra);
    c[1][0] = V({-1, 0});
    CHECK_NOTHROW(LieAlgebra({"A", "B"}, c));
}

TEST_CASE("Jacobi and antisymmetry on random elements") {
    const LieAlgebra& L = algebra();
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        const Vec a = random_vec(rng, 4), b = random_vec(rng, 4), c = random_vec(rng, 4);
        CHECK(is_zero(L.bracket(a, b) + L.bracket(b, a)));
        CHECK(is_zero(L.bracket(a, L.bracket(b, c)) + L.bracket(b, L.bracket(c, a)) + L.bracket(c, L.bracket(a, b))));
    }
}

TEST_CASE("center, derived series and radical") {
    const LieAlgebra& L = algebra();
    const Subspace x3 = Subspace::span({L.basis(2)}, 4);
    CHECK(center(L) == x3);
    CHECK(center(L).str(L.labels()) == "span{X3}");
    const auto ds = derived_series(L);
    REQUIRE(ds.size() == 3);
    CHECK(ds[0].dim() == 4);
    CHECK(ds[1].dim() == 3);
    CHECK(ds[2] == ds[1]);
    CHECK(ds[1] == Subspace::span({V({1, 0, 0, 0}), V({0, 1, Rational(1, 2), 0}), V({0, 0, 0, 1})}, 4));
    CHECK(radical(L) == x3);
    CHECK(is_ideal(L, x3));
    CHECK(is_solvable(L, x3));
    CHECK_FALSE(is_solvable(L, Subspace::whole(4)));
    CHECK(is_subalgebra(L, ds[1]));
    CHECK_FALSE(is_subalgebra(L, Subspace::span({L.basis(0), L.basis(3)}, 4)));

    const LieAlgebra ab = LieAlgebra::abelian(3);
    CHECK(center(ab) == Subspace::whole(3));
    CHECK(derived_series(ab).back().dim() == 0);
}

TEST_CASE("Killing form") {
    const LieAlgebra& L = algebra();
    const Matrix K = killing_form(L);
    CHECK(K.det().is_zero());
    CHECK(K == K.transpose());
    std::mt19937_64 rng(8);
    const auto kf = [&](const Vec& a, const Vec& b) { return (L.ad(a) * L.ad(b)).trace(); };
    for (int k = 0; k < 30; ++k) {
        const Vec a = random_vec(rng, 4), b = random_vec(rng, 4), c = random_vec(rng, 4);
        CHECK(kf(L.bracket(a, b), c) == kf(a, L.bracket(b, c)));
    }
    const auto s = derived_series(L)[1].basis();
    CHECK_FALSE(killing_gram(L, s).det().is_zero());
}

TEST_CASE("Levi decomposition") {
    const LieAlgebra& L = algebra();
    const Subspace s = derived_series(L)[1];
    const LeviReport rep = verify_levi(L, radical(L), s);
    CHECK(rep.passed());
    CHECK_FALSE(rep.s_killing_det.is_zero());
    const LeviReport bad = verify_levi(L, Subspace::span({L.basis(0)}, 4), s);
    CHECK_FALSE(bad.passed());
}

TEST_CASE("quotient by the center") {
    const LieAlgebra& L = algebra();
    const Quotient q = quotient_by_center(L);
    CHECK(q.representatives == std::vector<std::size_t>{0, 1, 3});
    CHECK(q.algebra.c(0, 1) == V({1, 0, 0}));
    CHECK(q.algebra.c(0, 2) == V({0, 1, 0}));
    CHECK(q.algebra.c(1, 2) == V({0, 0, 1}));
    std::mt19937_64 rng(4);
    for (int k = 0; k < 30; ++k) {
        const Vec a = random_vec(rng, 4), b = random_vec(rng, 4);
        CHECK(q.projection * L.bracket(a, b) == q.algebra.bracket(q.projection * a, q.projection * b));
    }
    CHECK(is_zero(q.projection * L.basis(2)));
}
