#include "gsym/app/commands.hpp"

#include "gsym/app/transcriptions.hpp"
#include "gsym/expr/diff.hpp"
#include "gsym/expr/io.hpp"
#include "gsym/expr/normal_form.hpp"
#include "gsym/lie/adjoint.hpp"
#include "gsym/lie/algebra.hpp"
#include "gsym/lie/optimal.hpp"
#include "gsym/model/generators.hpp"
#include "gsym/solutions/catalog.hpp"
#include "gsym/specfun/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace gsym::app {
namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Report start(const std::string& command, const RunConfig& config) {
    Report r;
    r.command = command;
    r.config = to_json(config);
    return r;
}

lie::LieAlgebra symmetry_algebra() { return lie::from_vector_fields(model::finite_generators()); }

std::string bracket_name(const std::vector<std::string>& labels, std::size_t i, std::size_t j) {
    return "[" + labels[i] + "," + labels[j] + "]";
}

std::string or_zero(const std::string& s) { return s.empty() ? "0" : s; }

void add_symmetry(Report& report, const std::string& name, const jets::VectorField& v, const model::GSEquation& eq,
                  const EquivOptions& options) {
    const auto s = model::is_symmetry(v, eq, options);
    std::string detail = eq.describe() + ", " + jets::describe(v);
    if (!std::holds_alternative<ProvenZero>(s.verdict)) detail += ", residual " + print(s.residual);
    detail += ", " + describe(s.verdict);
    report.add(name, verdict_name(s.verdict), detail, s.accepted());
}

Expr parse_component(const std::string& text) {
    try {
        return parse(text);
    } catch (const Error& e) {
        throw ConfigError("candidate component '" + text + "': " + e.what());
    }
}

/// xi1 d_x + ... as the criterion pr2 X (Delta) = 0, one coefficient per
/// prolongation component.
std::string criterion_text(const model::GSEquation& eq) {
    const Expr delta = model::gs_delta(eq);
    const std::pair<Symbol, const char*> parts[] = {
        {Symbol::x, "xi1"},      {Symbol::t, "xi2"},     {Symbol::u, "phi"},      {Symbol::u_x, "phi^x"},
        {Symbol::u_t, "phi^t"},  {Symbol::u_xx, "phi^xx"}, {Symbol::u_xt, "phi^xt"}, {Symbol::u_tt, "phi^tt"}};
    std::string out;
    for (const auto& [sym, name] : parts) {
        const Expr c = normalize(diff(delta, sym));
        if (is_zero_symbolic(c)) continue;
        if (!out.empty()) out += " + ";
        const auto* k = c.const_value();
        out += (k && k->is_one()) ? std::string(name) : "(" + print(c) + ")*" + name;
    }
    return out + " = 0";
}

}  // namespace

std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> out(1);
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0)
            out.emplace_back();
        else
            out.back() += c;
    }
    return out;
}

Report cmd_check_symmetries(const RunConfig& config, const std::optional<std::string>& candidate) {
    Report report = start("check-symmetries", config);
    const EquivOptions options = config.options();

    if (candidate) {
        report.config["candidate"] = *candidate;
        const auto parts = split_top_level(*candidate);
        if (parts.size() != 3) throw ConfigError("candidate must be \"xi1,xi2,phi\"");
        const jets::VectorField v{parse_component(parts[0]), parse_component(parts[1]), parse_component(parts[2]),
                                  "candidate"};
        for (const Expr& c : {v.xi1, v.xi2, v.phi})
            for (Symbol s : free_symbols(c))
                if (s != Symbol::x && s != Symbol::t && s != Symbol::u)
                    throw ConfigError("candidate components may only depend on x, t and u");
        const model::GSEquation eq = config.gs_equation();
        const bool symbolic = contains_funcsym(v.xi1) || contains_funcsym(v.xi2) || contains_funcsym(v.phi);
        if (symbolic) {
            const Expr constraint = model::constraint_for_function_symbol(v, eq);
            const bool unconditional = is_zero_symbolic(constraint);
            report.add("candidate", unconditional ? "ProvenZero" : "Conditional",
                       eq.describe() + ", " + jets::describe(v) + ", requires " + print(constraint) + " = 0",
                       unconditional);
        } else {
            add_symmetry(report, "candidate", v, eq, options);
        }
        return report;
    }

    const model::GSEquation basic = model::GSEquation::grad_shafranov();
    for (const auto& v : model::finite_generators()) add_symmetry(report, v.label, v, basic, options);
    for (const auto& c : model::x5_instances()) add_symmetry(report, c.name, c.field, c.equation, options);
    for (const auto& c : model::special_cases()) add_symmetry(report, c.name, c.field, c.equation, options);
    return report;
}

Report cmd_tables(const RunConfig& config) {
    Report report = start("tables", config);
    const PrintedTables printed = load_printed_tables();
    const lie::LieAlgebra L = symmetry_algebra();
    const auto& labels = L.labels();
    const std::size_t n = L.dim();

    report.text.push_back("commutators:");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            report.text.push_back("  " + bracket_name(labels, i, j) + " = " + or_zero(lie::combination(L.c(i, j), labels)));
    report.add("antisymmetry and Jacobi", "hold exactly", "checked over all basis pairs and triples");

    const std::set<std::pair<std::size_t, std::size_t>> expected(printed.commutator_differences.begin(),
                                                                 printed.commutator_differences.end());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const lie::Vec& p = printed.commutators.at(i).at(j);
            const bool differs = p != L.c(i, j);
            const bool want = expected.count({i, j}) > 0;
            const std::string name = "commutator " + bracket_name(labels, i, j);
            report.add(name, differs ? "differs from printed" : "matches printed",
                       differs ? "computed " + or_zero(lie::combination(L.c(i, j), labels)) : "", differs == want);
            if (differs)
                report.discrepancies.push_back({printed.cite("commutators") + ", entry " + bracket_name(labels, i, j),
                                                or_zero(lie::combination(p, labels)),
                                                or_zero(lie::combination(L.c(i, j), labels))});
        }
    }

    const auto fields = model::finite_generators();
    const auto consistent = [&](const std::vector<std::vector<lie::Vec>>& c) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                jets::VectorField sum{Expr(0), Expr(0), Expr(0), ""};
                for (std::size_t k = 0; k < n; ++k) sum = sum + c[i][j][k] * fields[k];
                if (!jets::same_field(jets::lie_bracket(fields[i], fields[j]), sum)) return false;
            }
        return true;
    };
    const bool computed_ok = consistent(L.constants());
    const bool printed_ok = consistent(printed.commutators);
    std::string printed_jacobi = "satisfies antisymmetry and Jacobi";
    try {
        lie::LieAlgebra(labels, printed.commutators);
    } catch (const lie::InvalidAlgebra& e) {
        printed_jacobi = e.what();
    }
    report.add("computed table against the generator brackets", computed_ok ? "consistent" : "inconsistent", "",
               computed_ok);
    report.add("printed table against the generator brackets", printed_ok ? "consistent" : "inconsistent",
               "printed table " + printed_jacobi, printed_ok == printed.commutator_differences.empty());

    const lie::Quotient q = lie::quotient_by_center(L);
    const auto& ylabels = q.algebra.labels();
    report.text.push_back("");
    report.text.push_back("quotient by the center:");
    std::string reps;
    for (std::size_t k = 0; k < q.representatives.size(); ++k)
        reps += (k ? ", " : "") + ylabels[k] + " = " + labels[q.representatives[k]] + " + z";
    report.text.push_back("  " + reps);
    for (std::size_t i = 0; i < q.algebra.dim(); ++i)
        for (std::size_t j = i + 1; j < q.algebra.dim(); ++j)
            report.text.push_back("  " + bracket_name(ylabels, i, j) + " = " +
                                  or_zero(lie::combination(q.algebra.c(i, j), ylabels)));
    for (std::size_t i = 0; i < q.algebra.dim(); ++i) {
        for (std::size_t j = 0; j < q.algebra.dim(); ++j) {
            const lie::Vec& p = printed.quotient.at(i).at(j);
            const bool same = p == q.algebra.c(i, j);
            report.add("quotient " + bracket_name(ylabels, i, j), same ? "matches printed" : "differs from printed",
                       same ? "" : "computed " + or_zero(lie::combination(q.algebra.c(i, j), ylabels)), same);
        }
    }
    std::vector<std::size_t> identity_reps(q.representatives.size());
    for (std::size_t k = 0; k < identity_reps.size(); ++k) identity_reps[k] = k;
    if (q.representatives != identity_reps)
        report.discrepancies.push_back({printed.cite("quotient") + ", basis labeling",
                                        printed.raw.at("quotient").at("labeling").get<std::string>(),
                                        reps + " (" + labels[2] + " + z = 0)"});

    const auto table = lie::adjoint_table(L);
    report.text.push_back("");
    report.text.push_back("adjoint action Ad(exp(eps Xi)) Xj:");
    for (const auto& row : table)
        for (const auto& e : row)
            report.text.push_back("  row " + labels[e.row] + ", col " + labels[e.col] + ": " + e.str(labels));

    const auto diffs = lie::diff_adjoint_table(L, printed.adjoint);
    const auto& entries = printed.raw.at("adjoint").at("entries");
    for (std::size_t k = 0; k < printed.adjoint.size(); ++k) {
        const auto& p = printed.adjoint[k];
        const auto it = std::find_if(diffs.begin(), diffs.end(),
                                     [&](const lie::AdjointDiff& d) { return d.row == p.row && d.col == p.col; });
        const bool differs = it != diffs.end();
        std::string verdict = "matches printed";
        if (differs) verdict = it->matches_after_sign_flip ? "differs by eps -> -eps" : "differs from printed";
        const std::string where = "row " + labels[p.row] + ", column " + labels[p.col];
        report.add("adjoint " + where, verdict, differs ? "computed " + it->computed : "",
                   differs == printed.adjoint_expected_difference[k]);
        if (differs) {
            std::string text = p.printed;
            if (entries[k].contains("reading")) text += " [" + entries[k]["reading"].get<std::string>() + "]";
            report.discrepancies.push_back({printed.cite("adjoint") + ", " + where, text,
                                            it->computed + (it->matches_after_sign_flip
                                                                ? " (printed entry uses the opposite sign of eps)"
                                                                : "")});
        }
    }
    return report;
}

Report cmd_algebra(const RunConfig& config) {
    Report report = start("algebra", config);
    const PrintedTables printed = load_printed_tables();
    const lie::LieAlgebra L = symmetry_algebra();
    const auto& labels = L.labels();

    const lie::Subspace z = lie::center(L);
    const lie::Subspace x3 = lie::Subspace::span({L.basis(2)}, L.dim());
    report.text.push_back("center: " + z.str(labels));
    report.add("center", z.str(labels), "", z == x3);

    const auto series = lie::derived_series(L);
    std::string dims;
    for (const auto& s : series) dims += (dims.empty() ? "" : ", ") + std::to_string(s.dim());
    report.text.push_back("derived series dimensions: " + dims);
    for (std::size_t k = 0; k < series.size(); ++k)
        report.text.push_back("  g(" + std::to_string(k) + ") = " + series[k].str(labels));
    const bool stabilizes = series.size() == 3 && series[0].dim() == 4 && series[1].dim() == 3 && series[2] == series[1];
    report.add("derived series", "dimensions " + dims, "g(2) = g(1) expected", stabilizes);

    const lie::Subspace g1 = series.size() > 1 ? series[1] : series[0];
    const lie::Subspace printed_g1 = lie::Subspace::span(printed.derived_algebra, L.dim());
    const bool g1_differs = !(printed_g1 == g1);
    report.add("first derived algebra", g1_differs ? "differs from printed" : "matches printed", g1.str(labels),
               g1_differs == printed.raw.at("derived_algebra").value("expected_difference", false));
    if (g1_differs)
        report.discrepancies.push_back({printed.cite("derived_algebra"),
                                        printed.raw.at("derived_algebra").at("printed").get<std::string>(),
                                        g1.str(labels)});

    const Rational full_det = lie::killing_form(L).det();
    report.text.push_back("Killing determinant on g: " + full_det.str());
    report.add("Killing determinant on g", full_det.str(), "degenerate since the center is nonzero", full_det.is_zero());

    const lie::Subspace r = lie::radical(L);
    report.text.push_back("radical: " + r.str(labels));
    report.add("radical", r.str(labels), "", r == x3);

    const lie::LeviReport levi = lie::verify_levi(L, r, g1);
    report.text.push_back("Levi factor s = " + g1.str(labels) + ", Killing determinant " + levi.s_killing_det.str());
    report.add("Killing determinant on s", levi.s_killing_det.str(), "nonzero expected", !levi.s_killing_det.is_zero());
    report.add("Levi decomposition", levi.passed() ? "pass" : "fail",
               "r = " + r.str(labels) + ", s = " + g1.str(labels) + "; " + levi.str(), levi.passed());
    return report;
}

Report cmd_classify(const std::vector<std::string>& coeffs, const RunConfig& config) {
    Report report = start("classify", config);
    report.config["coefficients"] = coeffs;
    if (coeffs.size() != 4) throw ConfigError("classify needs four coefficients");
    lie::Vec v;
    for (const auto& c : coeffs) {
        try {
            v.push_back(Rational::from_string(c));
        } catch (const std::exception& e) {
            throw ConfigError("coefficient '" + c + "': " + e.what());
        }
    }
    if (lie::is_zero(v)) throw ConfigError("cannot classify the zero element");

    const lie::LieAlgebra L = symmetry_algebra();
    const auto& labels = L.labels();
    const lie::Classification cls = lie::classify(v, L);
    report.text.push_back("element: " + lie::combination(v, labels));
    report.text.push_back("class: " + lie::class_name(cls.id));
    report.text.push_back("representative: " + lie::combination(cls.representative, labels));
    report.text.push_back("witness: " + cls.witness.str(labels));
    report.add("class", lie::class_name(cls.id), cls.str());

    if (cls.witness.exact()) {
        const lie::Vec replay = lie::apply_witness(cls.witness, v, L);
        const bool ok = replay == cls.representative;
        report.add("witness replay", ok ? "exact" : "differs", lie::combination(replay, labels), ok);
    } else {
        const lie::NumVec replay = lie::apply_witness_numeric(cls.witness, lie::to_numeric(v), L);
        const lie::NumVec want = lie::to_numeric(cls.representative);
        double err = 0.0;
        for (std::size_t k = 0; k < replay.size(); ++k) err = std::max(err, std::abs(replay[k] - want[k]));
        report.add("witness replay", err <= 1e-12 ? "numeric" : "differs", "max error " + fmt(err), err <= 1e-12);
    }

    const lie::Classification again = lie::classify(cls.representative, L);
    const bool idem = again.id == cls.id && again.representative == cls.representative;
    report.add("idempotent", idem ? "yes" : "no", lie::class_name(again.id), idem);
    return report;
}

Report cmd_verify_solutions(const RunConfig& config) {
    Report report = start("verify-solutions", config);
    const PrintedTables printed = load_printed_tables();
    const auto& sol = printed.raw.at("solutions");
    for (const auto& base : solutions::catalog()) {
        solutions::SolutionEntry s = base;
        s.domain = config.domain();
        const auto r = solutions::verify_solution(s, config.seed, config.samples, config.tol);
        std::string detail = s.equation.describe() + ", u = " + print(s.closed_form) + ", max |residual| " +
                             fmt(r.max_abs_residual) + " over " + std::to_string(r.points) + " points, " +
                             (r.proven_zero ? "symbolic zero" : "residual " + print(r.normalized_residual)) +
                             ", expected " + solutions::expected_name(r.expected);
        report.text.push_back(r.id + ": " + r.verdict() + " (expected " + solutions::expected_name(r.expected) +
                              "), max |residual| " + fmt(r.max_abs_residual) + (r.matches ? ", match" : ", MISMATCH"));
        report.add(r.id, r.verdict(), detail, r.matches);
        if (r.expected == solutions::Expected::Fail && sol.contains(r.id)) {
            std::string computed = "residual " + print(r.normalized_residual);
            for (const auto& other : solutions::catalog())
                if (other.id != r.id && other.id.substr(0, 2) == r.id.substr(0, 2))
                    computed += "; corrected u = " + print(other.closed_form);
            report.discrepancies.push_back({sol.at(r.id).at("cite").get<std::string>(),
                                            sol.at(r.id).at("printed").get<std::string>(), computed});
        }
    }
    return report;
}

Report cmd_specfun(const std::string& name, const std::string& x_text, const RunConfig& config) {
    Report report = start("specfun", config);
    report.config["function"] = name;
    report.config["x"] = x_text;
    const auto id = specfun::from_name(name);
    if (!id) throw ConfigError("unknown special function '" + name + "'");
    double x = 0.0;
    try {
        std::size_t used = 0;
        x = std::stod(x_text, &used);
        if (used != x_text.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw ConfigError("x must be a number, got '" + x_text + "'");
    }
    double series = 0.0;
    double oracle = 0.0;
    try {
        series = specfun::eval(*id, x);
        oracle = specfun::quadrature_oracle(*id, x);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    const double d = std::abs(series - oracle);
    report.text.push_back("series     " + fmt_full(series));
    report.text.push_back("quadrature " + fmt_full(oracle));
    report.text.push_back("|diff|     " + fmt_full(d));
    const bool agree = d <= 1e-8 * std::max(1.0, std::abs(oracle));
    report.add(std::string(specfun::name(*id)) + "(" + x_text + ")", agree ? "agree" : "disagree",
               "series " + fmt_full(series) + ", quadrature " + fmt_full(oracle) + ", |diff| " + fmt_full(d), agree);
    return report;
}

Report cmd_determining(const RunConfig& config) {
    Report report = start("determining", config);
    const model::GSEquation eq = config.gs_equation();
    const auto system = model::determining_system(eq);
    report.text.push_back("criterion: " + criterion_text(eq));
    report.text.push_back("determining system of " + eq.describe() + " (coefficient of each jet monomial):");
    for (const auto& d : system) report.text.push_back("  [" + d.monomial_text() + "] " + print(d.coefficient) + " = 0");
    report.add("determining system", std::to_string(system.size()) + " coefficients", eq.describe());
    if (!config.is_basic_equation()) return report;

    const PrintedTables printed = load_printed_tables();
    const auto generators = model::finite_generators();
    for (const auto& v : generators) {
        std::string first;
        for (const auto& d : system) {
            const Expr r = model::substitute_field(d.coefficient, v);
            if (!is_zero_symbolic(r)) {
                first = "[" + d.monomial_text() + "] -> " + print(r);
                break;
            }
        }
        report.add(v.label + " in every coefficient", first.empty() ? "exact zero" : "nonzero", first, first.empty());
    }

    for (std::size_t k = 0; k < printed.defining_relations.size(); ++k) {
        const auto& [text, rel] = printed.defining_relations[k];
        std::string failing;
        for (const auto& v : generators)
            if (!is_zero_symbolic(model::substitute_field(rel, v))) failing += (failing.empty() ? "" : ", ") + v.label;
        report.add("printed relation " + std::to_string(k + 1) + ": " + text,
                   failing.empty() ? "holds for X1..X4" : "fails", failing.empty() ? "" : "fails for " + failing,
                   failing.empty());
    }

    const Expr delta = model::gs_delta(eq);
    const Expr coefficient = normalize(diff(diff(delta, Symbol::x), Symbol::u_x));
    const bool differs = !is_zero_symbolic(coefficient - printed.criterion_u_x_xi1_coefficient);
    report.add("criterion coefficient of xi1*u_x", print(coefficient),
               "printed " + print(printed.criterion_u_x_xi1_coefficient),
               differs == printed.raw.at("criterion").value("expected_difference", false));
    if (differs)
        report.discrepancies.push_back({printed.cite("criterion"),
                                        printed.raw.at("criterion").at("printed").get<std::string>(),
                                        criterion_text(eq)});
    return report;
}

}  // namespace gsym::app
