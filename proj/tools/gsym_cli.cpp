#include "gsym/app/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct Overrides {
    std::optional<std::string> config_path;
    std::optional<std::string> a, p, F, G;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<double> tol;
};

gsym::app::RunConfig resolve(const Overrides& o) {
    gsym::app::RunConfig c = o.config_path ? gsym::app::load_config(*o.config_path) : gsym::app::RunConfig{};
    if (o.a) c.equation.a = *o.a;
    if (o.p) c.equation.p = *o.p;
    if (o.F) c.equation.F = *o.F;
    if (o.G) c.equation.G = *o.G;
    if (o.seed) c.seed = *o.seed;
    if (o.samples) c.samples = *o.samples;
    if (o.tol) c.tol = *o.tol;
    c.validate();
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry toolkit for the Grad-Shafranov equation family"};
    app.require_subcommand(1);

    Overrides o;
    std::optional<std::string> out;
    app.add_option("--config", o.config_path, "JSON run configuration");
    app.add_option("--a", o.a, "coefficient a of u_x/x");
    app.add_option("--p", o.p, "power p of x");
    app.add_option("--F", o.F, "F(u)");
    app.add_option("--G", o.G, "G(u)");
    app.add_option("--seed", o.seed, "sampling seed");
    app.add_option("--samples", o.samples, "number of sample points");
    app.add_option("--tol", o.tol, "numeric tolerance");
    app.add_option("--out", out, "write the JSON report here");

    std::optional<std::string> candidate;
    auto* check = app.add_subcommand("check-symmetries", "verify the symmetry generators");
    check->add_option("--candidate", candidate, "field \"xi1,xi2,phi\" to test on the configured equation");
    auto* tables = app.add_subcommand("tables", "commutator, quotient and adjoint tables");
    auto* algebra = app.add_subcommand("algebra", "center, derived series, Killing form, Levi decomposition");
    std::vector<std::string> coeffs;
    auto* classify = app.add_subcommand("classify", "canonical form of a1 X1 + a2 X2 + a3 X3 + a4 X4");
    classify->add_option("coefficients", coeffs, "a1 a2 a3 a4")->required()->expected(4);
    auto* solutions = app.add_subcommand("verify-solutions", "check the closed-form solution catalog");
    std::string fname, xval;
    auto* specfun = app.add_subcommand("specfun", "series value against the quadrature oracle");
    specfun->add_option("name", fname, "function name")->required();
    specfun->add_option("x", xval, "argument")->required();
    auto* determining = app.add_subcommand("determining", "determining equations of the configured equation");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const gsym::app::RunConfig config = resolve(o);
        gsym::app::Report report;
        if (check->parsed()) report = gsym::app::cmd_check_symmetries(config, candidate);
        else if (tables->parsed()) report = gsym::app::cmd_tables(config);
        else if (algebra->parsed()) report = gsym::app::cmd_algebra(config);
        else if (classify->parsed()) report = gsym::app::cmd_classify(coeffs, config);
        else if (solutions->parsed()) report = gsym::app::cmd_verify_solutions(config);
        else if (specfun->parsed()) report = gsym::app::cmd_specfun(fname, xval, config);
        else if (determining->parsed()) report = gsym::app::cmd_determining(config);

        std::cout << report.to_text();
        if (out) {
            std::ofstream f(*out);
            if (!f) throw gsym::app::ConfigError("cannot write report to '" + *out + "'");
            f << report.to_json().dump(2) << "\n";
        }
        return gsym::app::exit_code(report.status());
    } catch (const gsym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
