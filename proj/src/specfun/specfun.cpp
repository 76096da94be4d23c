#include "gsym/specfun/specfun.hpp"

#include "gsym/expr/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <cmath>
#include <string>

namespace gsym::specfun {
namespace {

using ld = long double;

constexpr ld kGamma = 0.57721566490153286060651209008240243104215933593992L;
constexpr ld kPi = 3.14159265358979323846264338327950288419716939937510L;
constexpr int kMaxTerms = 400;

struct Entry {
    Id id;
    std::string_view name;
};

constexpr std::array<Entry, 10> kNames{{
    {Id::besselj0, "besselj0"},
    {Id::besselj1, "besselj1"},
    {Id::bessely0, "bessely0"},
    {Id::bessely1, "bessely1"},
    {Id::besseli0, "besseli0"},
    {Id::besseli1, "besseli1"},
    {Id::besselk0, "besselk0"},
    {Id::besselk1, "besselk1"},
    {Id::shi, "shi"},
    {Id::chi, "chi"},
}};

void require_positive(Id f, double x) {
    if (!(x > 0.0)) throw DomainError(std::string(name(f)) + " requires x > 0, got " + std::to_string(x));
}

void require_finite(Id f, double x) {
    if (!std::isfinite(x)) throw DomainError(std::string(name(f)) + " requires a finite argument");
}

bool negligible(ld term, ld sum) { return std::fabs(term) <= 1e-21L * std::fabs(sum); }

// sum_k s^k q^k / (k! (k+n)!) * (x/2)^n with q = x^2/4, s = -1 for J and +1 for I;
// when with_harmonic is set each term carries weight w_k (H_k for n=0, H_k+H_{k+1} for n=1).
ld ascending(ld x, int n, int s, bool with_harmonic) {
    const ld q = x * x / 4;
    ld term = (n == 1) ? x / 2 : 1.0L;
    ld h_k = 0;
    ld h_k1 = 1;  // H_{k+1}
    ld sum = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
        if (k > 0) {
            term *= s * q / (static_cast<ld>(k) * (k + n));
            h_k += 1.0L / k;
            h_k1 += 1.0L / (k + 1);
        }
        const ld w = !with_harmonic ? 1.0L : (n == 0 ? h_k : h_k + h_k1);
        const ld contrib = term * w;
        sum += contrib;
        if (k > 4 && (term == 0 || negligible(contrib, sum))) break;
    }
    return sum;
}

}  // namespace

std::string_view name(Id f) { return kNames[static_cast<std::size_t>(f)].name; }

std::optional<Id> from_name(std::string_view n) {
    for (const auto& e : kNames)
        if (e.name == n) return e.id;
    return std::nullopt;
}

bool positive_domain(Id f) {
    switch (f) {
        case Id::bessely0:
        case Id::bessely1:
        case Id::besselk0:
        case Id::besselk1:
        case Id::chi:
            return true;
        default:
            return false;
    }
}

Range target_range(Id f) { return positive_domain(f) ? Range{0.0, 10.0} : Range{-10.0, 10.0}; }

double besselj0(double x) {
    require_finite(Id::besselj0, x);
    return static_cast<double>(ascending(x, 0, -1, false));
}

double besselj1(double x) {
    require_finite(Id::besselj1, x);
    return static_cast<double>(ascending(x, 1, -1, false));
}

double besseli0(double x) {
    require_finite(Id::besseli0, x);
    return static_cast<double>(ascending(x, 0, 1, false));
}

double besseli1(double x) {
    require_finite(Id::besseli1, x);
    return static_cast<double>(ascending(x, 1, 1, false));
}

double bessely0(double x) {
    require_finite(Id::bessely0, x);
    require_positive(Id::bessely0, x);
    const ld z = x;
    const ld lead = (std::log(z / 2) + kGamma) * ascending(z, 0, -1, false);
    // (2/pi) sum_{k>=1} (-1)^{k+1} H_k q^k/(k!)^2 = -(2/pi) * ascending with weights H_k and s=-1
    return static_cast<double>(2 / kPi * (lead - ascending(z, 0, -1, true)));
}

double bessely1(double x) {
    require_finite(Id::bessely1, x);
    require_positive(Id::bessely1, x);
    const ld z = x;
    const ld lead = 2 / kPi * (std::log(z / 2) + kGamma) * ascending(z, 1, -1, false);
    return static_cast<double>(lead - 2 / (kPi * z) - ascending(z, 1, -1, true) / kPi);
}

double besselk0(double x) {
    require_finite(Id::besselk0, x);
    require_positive(Id::besselk0, x);
    const ld z = x;
    return static_cast<double>(-(std::log(z / 2) + kGamma) * ascending(z, 0, 1, false) + ascending(z, 0, 1, true));
}

double besselk1(double x) {
    require_finite(Id::besselk1, x);
    require_positive(Id::besselk1, x);
    const ld z = x;
    return static_cast<double>(1 / z + (std::log(z / 2) + kGamma) * ascending(z, 1, 1, false) -
                               ascending(z, 1, 1, true) / 2);
}

double shi(double x) {
    require_finite(Id::shi, x);
    const ld z = x;
    const ld z2 = z * z;
    ld power = z;  // z^(2k+1)/(2k+1)!
    ld sum = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
        if (k > 0) power *= z2 / (static_cast<ld>(2 * k) * (2 * k + 1));
        const ld term = power / (2 * k + 1);
        sum += term;
        if (term == 0 || negligible(term, sum)) break;
    }
    return static_cast<double>(sum);
}

double chi(double x) {
    require_finite(Id::chi, x);
    require_positive(Id::chi, x);
    const ld z = x;
    const ld z2 = z * z;
    ld power = 1;  // z^(2k)/(2k)!
    ld sum = 0;
    for (int k = 1; k < kMaxTerms; ++k) {
        power *= z2 / (static_cast<ld>(2 * k - 1) * (2 * k));
        const ld term = power / (2 * k);
        sum += term;
        if (negligible(term, sum)) break;
    }
    return static_cast<double>(kGamma + std::log(z) + sum);
}

double eval(Id f, double x) {
    switch (f) {
        case Id::besselj0: return besselj0(x);
        case Id::besselj1: return besselj1(x);
        case Id::bessely0: return bessely0(x);
        case Id::bessely1: return bessely1(x);
        case Id::besseli0: return besseli0(x);
        case Id::besseli1: return besseli1(x);
        case Id::besselk0: return besselk0(x);
        case Id::besselk1: return besselk1(x);
        case Id::shi: return shi(x);
        case Id::chi: return chi(x);
    }
    return 0.0;
}

double derivative(Id f, double x) {
    switch (f) {
        case Id::besselj0: return -besselj1(x);
        case Id::besselj1: return besselj0(x) - besselj1(x) / x;
        case Id::bessely0: return -bessely1(x);
        case Id::bessely1: return bessely0(x) - bessely1(x) / x;
        case Id::besseli0: return besseli1(x);
        case Id::besseli1: return besseli0(x) - besseli1(x) / x;
        case Id::besselk0: return -besselk1(x);
        case Id::besselk1: return -besselk0(x) - besselk1(x) / x;
        case Id::shi: return x == 0.0 ? 1.0 : std::sinh(x) / x;
        case Id::chi: require_positive(Id::chi, x); return std::cosh(x) / x;
    }
    return 0.0;
}

namespace {

template <typename Fn>
double finite_integral(Fn&& fn, double a, double b, double tol) {
    if (a == b) return 0.0;
    double error = 0;
    double l1 = 0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(fn, a, b, 20, tol, &error, &l1);
    if (!(error <= 1e3 * tol * std::max(1.0, l1))) throw NonConvergence("quadrature error estimate too large");
    return value;
}

template <typename Fn>
double half_line_integral(Fn&& fn, double tol) {
    boost::math::quadrature::exp_sinh<double> integrator;
    double error = 0;
    double l1 = 0;
    const double value = integrator.integrate(fn, tol, &error, &l1);
    if (!(error <= 1e3 * tol * std::max(1.0, l1))) throw NonConvergence("quadrature error estimate too large");
    return value;
}

}  // namespace

double quadrature_oracle(Id f, double x, double tol) {
    require_finite(f, x);
    if (positive_domain(f)) require_positive(f, x);
    const double pi = boost::math::constants::pi<double>();
    switch (f) {
        case Id::besselj0:
        case Id::besselj1: {
            const int n = f == Id::besselj0 ? 0 : 1;
            return finite_integral([&](double th) { return std::cos(n * th - x * std::sin(th)); }, 0.0, pi, tol) / pi;
        }
        case Id::besseli0:
        case Id::besseli1: {
            const int n = f == Id::besseli0 ? 0 : 1;
            return finite_integral([&](double th) { return std::exp(x * std::cos(th)) * std::cos(n * th); }, 0.0, pi,
                                   tol) /
                   pi;
        }
        case Id::bessely0: {
            const double osc = finite_integral([&](double th) { return std::sin(x * std::sin(th)); }, 0.0, pi, tol);
            const double tail = half_line_integral([&](double s) { return std::exp(-x * std::sinh(s)); }, tol);
            return osc / pi - 2 * tail / pi;
        }
        case Id::bessely1: {
            const double osc =
                finite_integral([&](double th) { return std::sin(x * std::sin(th) - th); }, 0.0, pi, tol);
            const double tail =
                half_line_integral(
                [&](double s) {
                    const double decay = std::exp(-x * std::sinh(s));
                    return decay == 0.0 ? 0.0 : std::sinh(s) * decay;
                },
                tol);
            return osc / pi - 2 * tail / pi;
        }
        case Id::besselk0:
        case Id::besselk1: {
            const int n = f == Id::besselk0 ? 0 : 1;
            return half_line_integral(
                [&](double s) {
                    const double decay = std::exp(-x * std::cosh(s));
                    return decay == 0.0 ? 0.0 : decay * std::cosh(n * s);
                },
                tol);
        }
        case Id::shi:
            return finite_integral([](double s) { return s == 0.0 ? 1.0 : std::sinh(s) / s; }, 0.0, x, tol);
        case Id::chi: {
            const auto integrand = [](double s) {
                if (s == 0.0) return 0.0;
                const double h = std::sinh(s / 2);
                return 2 * h * h / s;
            };
            return static_cast<double>(kGamma) + std::log(x) + finite_integral(integrand, 0.0, x, tol);
        }
    }
    return 0.0;
}

}  // namespace gsym::specfun
