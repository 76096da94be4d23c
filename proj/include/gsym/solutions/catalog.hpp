#pragma once

#include "gsym/expr/equiv.hpp"
#include "gsym/model/gs_equation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsym::solutions {

enum class Expected { Pass, Fail, Undetermined };

std::string expected_name(Expected e);

/// Closed-form candidate u(x, t; C1, C2) for one member of the equation family.
struct SolutionEntry {
    std::string id;
    model::GSEquation equation;
    Expr closed_form;
    std::string source;
    Expected expected;
    /// For expected failures: the residual the display is known to leave.
    std::optional<Expr> expected_residual;
    SamplingDomain domain;
};

/// S1..S4 (invariant solutions of X2, X4, X2+X3, X1+X3), S5p and S5c (the
/// X1 reduction as displayed and corrected), S6 and S7 (F = 1, G = u and
/// F = u, G = 1).
const std::vector<SolutionEntry>& catalog();
const SolutionEntry& find(const std::string& id);

/// Delta[u] with u replaced by the closed form, derivatives taken
/// symbolically; not normalized.
Expr residual_expression(const SolutionEntry& s);
/// normalize(residual_expression(s)).
Expr symbolic_residual(const SolutionEntry& s);

/// Delta[u] at one point.
double residual(const SolutionEntry& s, double x, double t, double c1, double c2);

struct SolutionReport {
    std::string id;
    bool proven_zero = false;
    bool pass = false;
    double max_abs_residual = 0.0;
    int points = 0;
    std::optional<Bindings> witness;
    double witness_value = 0.0;
    Expected expected = Expected::Pass;
    /// Verdict agrees with the expectation (for expected failures, the
    /// symbolic residual must also equal the recorded one).
    bool matches = false;
    Expr normalized_residual;

    std::string verdict() const { return pass ? "pass" : "fail"; }
};

/// Samples `samples` points from the entry's domain; passes iff the residual
/// normalizes to 0 or every |residual| < tol * (1 + |u|). The maximum sampled
/// residual is reported either way.
SolutionReport verify_solution(const SolutionEntry& s, std::uint64_t seed, int samples, double tol);

}  // namespace gsym::solutions
