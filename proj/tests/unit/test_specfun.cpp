#include "gsym/expr/errors.hpp"
#include "gsym/expr/symbols.hpp"
#include "gsym/specfun/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <doctest.h>

#include <cmath>
#include <vector>

using namespace gsym::specfun;

namespace {

// Independent reference values from Boost.Math.
double reference(Id f, double x) {
    namespace bm = boost::math;
    switch (f) {
        case Id::besselj0: return bm::cyl_bessel_j(0, x);
        case Id::besselj1: return bm::cyl_bessel_j(1, x);
        case Id::bessely0: return bm::cyl_neumann(0, x);
        case Id::bessely1: return bm::cyl_neumann(1, x);
        case Id::besseli0: return bm::cyl_bessel_i(0, x);
        case Id::besseli1: return bm::cyl_bessel_i(1, x);
        case Id::besselk0: return bm::cyl_bessel_k(0, x);
        case Id::besselk1: return bm::cyl_bessel_k(1, x);
        case Id::shi:
            if (x == 0) return 0;
            return std::copysign((bm::expint(std::abs(x)) + bm::expint(1, std::abs(x))) / 2, x);
        case Id::chi: return (bm::expint(x) - bm::expint(1, x)) / 2;
    }
    return 0;
}

std::vector<double> grid(Id f) {
    const Range r = target_range(f);
    std::vector<double> xs;
    for (int k = 0; k < 16; ++k) {
        double x = r.lo + (r.hi - r.lo) * (k + 0.5) / 16;
        if (positive_domain(f) && x <= 0) x = 1e-3;
        xs.push_back(x);
    }
    return xs;
}

double tol_for(double v) { return 1e-12 * std::max(1.0, std::abs(v)); }

}  // namespace

TEST_CASE("names round trip") {
    for (Id f : kAllIds) CHECK(from_name(name(f)) == f);
    CHECK_FALSE(from_name("besselj2").has_value());
}

TEST_CASE("series values against an independent library") {
    for (Id f : kAllIds) {
        for (double x : grid(f)) {
            CAPTURE(name(f));
            CAPTURE(x);
            const double ref = reference(f, x);
            CHECK(std::abs(eval(f, x) - ref) <= tol_for(ref));
        }
    }
}

TEST_CASE("series and quadrature agree on the grid") {
    for (Id f : kAllIds) {
        for (double x : grid(f)) {
            CAPTURE(name(f));
            CAPTURE(x);
            const double s = eval(f, x);
            CHECK(std::abs(s - quadrature_oracle(f, x)) <= 1e-10 * std::max(1.0, std::abs(s)));
        }
    }
}

TEST_CASE("values at zero and parity") {
    CHECK(eval(Id::besselj0, 0) == 1.0);
    CHECK(eval(Id::besselj1, 0) == 0.0);
    CHECK(eval(Id::besseli0, 0) == 1.0);
    CHECK(eval(Id::shi, 0) == 0.0);
    CHECK(quadrature_oracle(Id::shi, 0) == 0.0);
    for (double x : {0.3, 2.0, 7.5}) {
        CHECK(eval(Id::besselj0, -x) == doctest::Approx(eval(Id::besselj0, x)).epsilon(1e-15));
        CHECK(eval(Id::besselj1, -x) == doctest::Approx(-eval(Id::besselj1, x)).epsilon(1e-15));
        CHECK(eval(Id::besseli1, -x) == doctest::Approx(-eval(Id::besseli1, x)).epsilon(1e-15));
        CHECK(eval(Id::shi, -x) == doctest::Approx(-eval(Id::shi, x)).epsilon(1e-15));
    }
}

TEST_CASE("domain errors") {
    for (Id f : {Id::bessely0, Id::bessely1, Id::besselk0, Id::besselk1, Id::chi}) {
        CHECK_THROWS_AS(eval(f, 0.0), gsym::DomainError);
        CHECK_THROWS_AS(eval(f, -1.0), gsym::DomainError);
        CHECK_THROWS_AS(quadrature_oracle(f, -1.0), gsym::DomainError);
    }
}

TEST_CASE("Wronskians") {
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
        const double wj = besselj1(x) * bessely0(x) - besselj0(x) * bessely1(x);
        CHECK(std::abs(wj - 2 / (M_PI * x)) <= 1e-12);
        const double wi = besseli0(x) * besselk1(x) + besseli1(x) * besselk0(x);
        CHECK(std::abs(wi - 1 / x) <= 1e-12);
    }
}

TEST_CASE("Bessel equations by finite differences") {
    const double h = 1e-4;
    for (int k = 1; k <= 20; ++k) {
        const double x = 0.5 * k;
        const auto d2 = [&](Id f) { return (eval(f, x + h) - 2 * eval(f, x) + eval(f, x - h)) / (h * h); };
        for (Id f : {Id::besselj1, Id::bessely1}) {
            const double r = x * x * d2(f) + x * derivative(f, x) + (x * x - 1) * eval(f, x);
            CHECK(std::abs(r) <= 1e-5 * (1 + x * x));
        }
        for (Id f : {Id::besseli1, Id::besselk1}) {
            const double r = x * x * d2(f) + x * derivative(f, x) - (x * x + 1) * eval(f, x);
            CHECK(std::abs(r) <= 1e-5 * (1 + x * x) * std::max(1.0, std::abs(eval(f, x))));
        }
    }
}

TEST_CASE("derivative recurrences against central differences") {
    const double h = 1e-6;
    for (Id f : kAllIds) {
        for (double x : {0.7, 1.9, 4.2}) {
            const double fd = (eval(f, x + h) - eval(f, x - h)) / (2 * h);
            CAPTURE(name(f));
            CHECK(std::abs(fd - derivative(f, x)) <= 1e-7 * std::max(1.0, std::abs(fd)));
        }
    }
    for (double x : {0.5, 1.0, 3.0}) {
        CHECK(derivative(Id::shi, x) * x == doctest::Approx(std::sinh(x)).epsilon(1e-14));
        CHECK(derivative(Id::chi, x) * x == doctest::Approx(std::cosh(x)).epsilon(1e-14));
    }
}

TEST_CASE("Euler gamma by Richardson extrapolation") {
    // H_n - ln n - 1/(2n) = gamma - 1/(12 n^2) + O(n^-4).
    const auto a = [](long n) {
        long double h = 0;
        for (long k = n; k >= 1; --k) h += 1.0L / k;
        return h - std::log(static_cast<long double>(n)) - 1.0L / (2 * n);
    };
    const long n = 10000000;
    const long double extrapolated = (4 * a(2 * n) - a(n)) / 3;
    CHECK(std::abs(static_cast<double>(extrapolated) - gsym::kEulerGamma) < 1e-15);
    CHECK(std::abs(eval(Id::chi, 1e-8) - (gsym::kEulerGamma + std::log(1e-8))) < 1e-14);
}
