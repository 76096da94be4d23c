#include "gsym/app/config.hpp"

#include "gsym/expr/io.hpp"

#include <cmath>
#include <fstream>

namespace gsym::app {
namespace {

using nlohmann::ordered_json;

std::string text_field(const ordered_json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ConfigError(std::string("equation.") + key + " must be a string or an integer");
}

Interval interval_field(const ordered_json& v, const std::string& key) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ConfigError(key + " must be a two-element numeric array");
    return {v[0].get<double>(), v[1].get<double>()};
}

void check_interval(const Interval& r, const std::string& key) {
    if (!std::isfinite(r.first) || !std::isfinite(r.second) || r.first > r.second)
        throw ConfigError(key + " must be a nonempty finite interval");
}

}  // namespace

void RunConfig::validate() const {
    if (samples < 1) throw ConfigError("samples must be at least 1");
    if (!(tol > 0.0) || !std::isfinite(tol)) throw ConfigError("tol must be positive");
    check_interval(x_range, "x_range");
    check_interval(t_range, "t_range");
    check_interval(c_range, "c_range");
    gs_equation();
}

model::GSEquation RunConfig::gs_equation() const {
    try {
        return model::GSEquation::from_text(equation.a, equation.p, equation.F, equation.G);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(std::string("equation: ") + e.what());
    } catch (const std::exception& e) {
        throw ConfigError(std::string("equation: ") + e.what());
    }
}

SamplingDomain RunConfig::domain() const {
    SamplingDomain d;
    d.x_range = x_range;
    d.other_range = t_range;
    d.overrides[Symbol::C1] = c_range;
    d.overrides[Symbol::C2] = c_range;
    return d;
}

EquivOptions RunConfig::options() const {
    EquivOptions o;
    o.seed = seed;
    o.samples = samples;
    o.tol = tol;
    o.domain = domain();
    return o;
}

bool RunConfig::is_basic_equation() const {
    return gs_equation().describe() == model::GSEquation::grad_shafranov().describe();
}

RunConfig config_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig c;
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "equation") {
                if (!v.is_object()) throw ConfigError("equation must be an object");
                for (const auto& [k, _] : v.items())
                    if (k != "a" && k != "p" && k != "F" && k != "G")
                        throw ConfigError("unknown equation field '" + k + "'");
                if (v.contains("a")) c.equation.a = text_field(v, "a");
                if (v.contains("p")) c.equation.p = text_field(v, "p");
                if (v.contains("F")) c.equation.F = text_field(v, "F");
                if (v.contains("G")) c.equation.G = text_field(v, "G");
            } else if (key == "seed") {
                if (!v.is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
                c.seed = v.get<std::uint64_t>();
            } else if (key == "samples") {
                if (!v.is_number_integer()) throw ConfigError("samples must be an integer");
                c.samples = v.get<int>();
            } else if (key == "tol") {
                if (!v.is_number()) throw ConfigError("tol must be a number");
                c.tol = v.get<double>();
            } else if (key == "x_range") {
                c.x_range = interval_field(v, key);
            } else if (key == "t_range") {
                c.t_range = interval_field(v, key);
            } else if (key == "c_range") {
                c.c_range = interval_field(v, key);
            } else {
                throw ConfigError("unknown config field '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    return config_from_json(j);
}

nlohmann::ordered_json to_json(const RunConfig& c) {
    ordered_json j;
    j["equation"] = {{"a", c.equation.a}, {"p", c.equation.p}, {"F", c.equation.F}, {"G", c.equation.G}};
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["tol"] = c.tol;
    j["x_range"] = {c.x_range.first, c.x_range.second};
    j["t_range"] = {c.t_range.first, c.t_range.second};
    j["c_range"] = {c.c_range.first, c.c_range.second};
    return j;
}

}  // namespace gsym::app
