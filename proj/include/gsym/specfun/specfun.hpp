#pragma once

#include <optional>
#include <string_view>

namespace gsym::specfun {

enum class Id { besselj0, besselj1, bessely0, bessely1, besseli0, besseli1, besselk0, besselk1, shi, chi };

inline constexpr Id kAllIds[] = {Id::besselj0, Id::besselj1, Id::bessely0, Id::bessely1, Id::besseli0,
                                 Id::besseli1, Id::besselk0, Id::besselk1, Id::shi,      Id::chi};

std::string_view name(Id f);
std::optional<Id> from_name(std::string_view name);

/// Y, K and chi need x > 0.
bool positive_domain(Id f);

/// Lower and upper end of the range the implementation is validated on.
struct Range {
    double lo;
    double hi;
};
Range target_range(Id f);

/// Ascending-series value. Throws DomainError outside the real domain.
double eval(Id f, double x);

double besselj0(double x);
double besselj1(double x);
double bessely0(double x);
double bessely1(double x);
double besseli0(double x);
double besseli1(double x);
double besselk0(double x);
double besselk1(double x);
double shi(double x);
double chi(double x);

/// Derivatives by the closed recurrences (J1' = J0 - J1/x, K1' = -K0 - K1/x, ...).
double derivative(Id f, double x);

/// Adaptive quadrature of an integral representation, independent of the
/// series code. Throws DomainError, or NonConvergence when the error
/// estimate misses the requested tolerance by a wide margin.
double quadrature_oracle(Id f, double x, double tol = 1e-12);

}  // namespace gsym::specfun
