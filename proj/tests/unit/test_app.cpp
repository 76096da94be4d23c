#include "gsym/app/commands.hpp"
#include "gsym/app/transcriptions.hpp"

#include <doctest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

using namespace gsym::app;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(GSYM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

bool has_result(const Report& r, const std::string& name, const std::string& verdict) {
    for (const auto& c : r.results)
        if (c.name == name && c.verdict == verdict) return true;
    return false;
}

}  // namespace

TEST_CASE("config parsing and validation") {
    const auto c = config_from_json(nlohmann::ordered_json::parse(
        R"j({"equation": {"F": "exp(2*u)", "G": "exp(u)"}, "seed": 5, "samples": 30, "tol": 1e-8, "x_range": [1, 2]})j"));
    CHECK(c.equation.F == "exp(2*u)");
    CHECK(c.equation.a == "-1");
    CHECK(c.seed == 5);
    CHECK(c.x_range == gsym::Interval{1.0, 2.0});
    CHECK_FALSE(c.is_basic_equation());
    CHECK(RunConfig{}.is_basic_equation());

    const auto bad = [](const char* text) { return config_from_json(nlohmann::ordered_json::parse(text)); };
    CHECK_THROWS_AS(bad(R"j({"samples": 0})j"), ConfigError);
    CHECK_THROWS_AS(bad(R"j({"tol": -1})j"), ConfigError);
    CHECK_THROWS_AS(bad(R"j({"x_range": [3, 1]})j"), ConfigError);
    CHECK_THROWS_AS(bad(R"j({"equation": {"F": "u +"}})j"), ConfigError);
    CHECK_THROWS_AS(bad(R"j({"equation": {"F": "x*u"}})j"), ConfigError);
    CHECK_THROWS_AS(bad(R"j({"bogus": 1})j"), ConfigError);
    CHECK_THROWS_AS(bad(R"j([1, 2])j"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("top-level splitting") {
    CHECK(split_top_level("x,t,-2") == std::vector<std::string>{"x", "t", "-2"});
    CHECK(split_top_level("psi(x,t),0,u") == std::vector<std::string>{"psi(x,t)", "0", "u"});
}

TEST_CASE("transcriptions load") {
    const PrintedTables t = load_printed_tables();
    CHECK(t.commutators.size() == 4);
    CHECK(t.adjoint.size() == 16);
    CHECK(t.defining_relations.size() == 9);
    CHECK_THROWS_AS(load_printed_tables("/nonexistent.json"), ConfigError);
}

TEST_CASE("check-symmetries") {
    RunConfig c;
    const Report all = cmd_check_symmetries(c);
    CHECK(all.status() == Status::ok);
    CHECK(all.results.size() == 12);

    c.equation.F = "exp(2*u)";
    c.equation.G = "exp(u)";
    CHECK(cmd_check_symmetries(c, "x,t,-2").status() == Status::ok);

    const Report dx = cmd_check_symmetries(RunConfig{}, "1,0,0");
    CHECK(dx.status() == Status::mismatch);
    CHECK(dx.results[0].detail.find("residual") != std::string::npos);
    CHECK_THROWS_AS(cmd_check_symmetries(RunConfig{}, "1,0"), ConfigError);
    CHECK_THROWS_AS(cmd_check_symmetries(RunConfig{}, "u_x,0,0"), ConfigError);
}

TEST_CASE("tables") {
    const Report r = cmd_tables(RunConfig{});
    CHECK(r.status() == Status::ok);
    bool saw = false;
    for (const auto& line : r.text) saw |= line.find("[X2,X4] = X4") != std::string::npos;
    CHECK(saw);
    bool x14 = false, x13 = false;
    for (const auto& d : r.discrepancies) {
        x14 |= d.cite.find("[X1,X4]") != std::string::npos && d.computed == "X2 + 1/2*X3";
        x13 |= d.cite.find("row X1, column X3") != std::string::npos;
    }
    CHECK(x14);
    CHECK(x13);
    CHECK(has_result(r, "quotient [Y2,Y3]", "matches printed"));
}

TEST_CASE("algebra") {
    const Report r = cmd_algebra(RunConfig{});
    CHECK(r.status() == Status::ok);
    CHECK(has_result(r, "center", "span{X3}"));
    CHECK(has_result(r, "derived series", "dimensions 4, 3, 3"));
    CHECK(has_result(r, "Levi decomposition", "pass"));
}

TEST_CASE("classify") {
    CHECK(has_result(cmd_classify({"0", "0", "1", "0"}, RunConfig{}), "class", "X3"));
    CHECK(has_result(cmd_classify({"0", "1", "0", "0"}, RunConfig{}), "class", "X2"));
    const Report r = cmd_classify({"1", "2", "3", "4"}, RunConfig{});
    CHECK(has_result(r, "class", "aX1+bX2+X4"));
    CHECK(has_result(r, "witness replay", "exact"));
    CHECK_THROWS_AS(cmd_classify({"0", "0", "0", "0"}, RunConfig{}), ConfigError);
    CHECK_THROWS_AS(cmd_classify({"1", "x", "0", "0"}, RunConfig{}), ConfigError);
}

TEST_CASE("verify-solutions and specfun") {
    const Report s = cmd_verify_solutions(RunConfig{});
    CHECK(s.status() == Status::ok);
    CHECK(has_result(s, "S5p", "fail"));
    CHECK(has_result(s, "S6", "pass"));
    CHECK(cmd_specfun("shi", "0", RunConfig{}).status() == Status::ok);
    CHECK(cmd_specfun("besselj1", "1", RunConfig{}).status() == Status::ok);
    CHECK_THROWS_AS(cmd_specfun("bessely1", "-1", RunConfig{}), ConfigError);
    CHECK_THROWS_AS(cmd_specfun("nope", "1", RunConfig{}), ConfigError);
    CHECK_THROWS_AS(cmd_specfun("besselj0", "1x", RunConfig{}), ConfigError);
}

TEST_CASE("determining") {
    const Report r = cmd_determining(RunConfig{});
    CHECK(r.status() == Status::ok);
    CHECK(r.discrepancies.size() == 1);
    RunConfig other;
    other.equation.G = "u";
    CHECK(cmd_determining(other).results.size() == 1);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
    RunConfig c;
    c.seed = 77;
    CHECK(cmd_verify_solutions(c).to_json().dump(2) == cmd_verify_solutions(c).to_json().dump(2));
    CHECK(cmd_check_symmetries(c, "1,0,0").to_json().dump() == cmd_check_symmetries(c, "1,0,0").to_json().dump());
    CHECK(cmd_tables(c).to_json().dump() == cmd_tables(c).to_json().dump());
}

TEST_CASE("report schema") {
    const auto j = cmd_classify({"0", "0", "1", "0"}, RunConfig{}).to_json();
    std::vector<std::string> keys;
    for (const auto& [k, _] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "config", "results", "discrepancies", "status"});
    CHECK(j["status"] == "ok");
    CHECK(j["results"][0].contains("verdict"));
}

TEST_CASE("command-line exit codes") {
    CHECK(run_cli("check-symmetries") == 0);
    CHECK(run_cli("--F 'exp(2*u)' --G 'exp(u)' check-symmetries --candidate 'x,t,-2'") == 0);
    CHECK(run_cli("check-symmetries --candidate '1,0,0'") == 1);
    CHECK(run_cli("tables") == 0);
    CHECK(run_cli("algebra") == 0);
    CHECK(run_cli("classify 0 0 1 0") == 0);
    CHECK(run_cli("classify -1 0 1 0") == 0);
    CHECK(run_cli("classify 0 0 0 0") == 2);
    CHECK(run_cli("verify-solutions") == 0);
    CHECK(run_cli("specfun shi 0") == 0);
    CHECK(run_cli("specfun bessely1 -1") == 2);
    CHECK(run_cli("determining") == 0);
    CHECK(run_cli("--samples 0 tables") == 2);
    CHECK(run_cli("--F 'u +' check-symmetries") == 2);
    CHECK(run_cli("--config /nonexistent.json tables") == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("") == 2);
}
