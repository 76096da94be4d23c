#pragma once

#include "gsym/app/config.hpp"
#include "gsym/app/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsym::app {

/// Without a candidate: X1..X4 and the X5 instances on the basic equation,
/// plus the special (F, G) cases on their own equations. With a candidate
/// "xi1,xi2,phi": that field on the configured equation, expected to be a
/// symmetry.
Report cmd_check_symmetries(const RunConfig& config, const std::optional<std::string>& candidate = std::nullopt);
/// Commutator, quotient and adjoint tables diffed against the transcriptions.
Report cmd_tables(const RunConfig& config);
Report cmd_algebra(const RunConfig& config);
/// Throws ConfigError for the zero vector or unparsable coefficients.
Report cmd_classify(const std::vector<std::string>& coeffs, const RunConfig& config);
Report cmd_verify_solutions(const RunConfig& config);
/// Throws ConfigError for unknown names and points outside the domain.
Report cmd_specfun(const std::string& name, const std::string& x, const RunConfig& config);
/// Determining system of the configured equation; for the basic equation
/// also the X1..X4 substitutions and the printed defining relations.
Report cmd_determining(const RunConfig& config);

/// Splits "a,b,c" at top-level commas.
std::vector<std::string> split_top_level(const std::string& text);

}  // namespace gsym::app
