#pragma once

#include "gsym/expr/equiv.hpp"
#include "gsym/expr/errors.hpp"
#include "gsym/model/gs_equation.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace gsym::app {

/// Bad config file, flag value or command argument (exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

struct EquationText {
    std::string a = "-1";
    std::string p = "2";
    std::string F = "1";
    std::string G = "0";
};

struct RunConfig {
    EquationText equation;
    std::uint64_t seed = 1;
    int samples = 200;
    double tol = 1e-9;
    Interval x_range{0.5, 3.0};
    Interval t_range{-2.0, 2.0};
    Interval c_range{-2.0, 2.0};

    /// Throws ConfigError when an invariant fails.
    void validate() const;
    model::GSEquation gs_equation() const;
    /// x from x_range, C1 and C2 from c_range, everything else from t_range.
    SamplingDomain domain() const;
    EquivOptions options() const;
    bool is_basic_equation() const;
};

/// Reads a JSON object with any subset of the RunConfig fields; unknown keys
/// are rejected.
RunConfig load_config(const std::string& path);
RunConfig config_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const RunConfig& c);

}  // namespace gsym::app
