#include "gsym/app/transcriptions.hpp"

#include "gsym/app/config.hpp"
#include "gsym/expr/io.hpp"

#include <cstdlib>
#include <fstream>

#ifndef GSYM_DATA_DIR
#define GSYM_DATA_DIR "data"
#endif

namespace gsym::app {
namespace {

using nlohmann::ordered_json;

lie::Vec vec(const ordered_json& j) {
    lie::Vec v;
    for (const auto& c : j) v.push_back(Rational::from_string(c.get<std::string>()));
    return v;
}

std::vector<std::vector<lie::Vec>> table(const ordered_json& rows) {
    std::vector<std::vector<lie::Vec>> out;
    for (const auto& row : rows) {
        auto& r = out.emplace_back();
        for (const auto& cell : row) r.push_back(vec(cell));
    }
    return out;
}

}  // namespace

std::string PrintedTables::cite(const std::string& section) const {
    return raw.at(section).at("cite").get<std::string>();
}

std::string data_dir() {
    if (const char* env = std::getenv("GSYM_DATA_DIR"); env && *env) return env;
    return GSYM_DATA_DIR;
}

PrintedTables load_printed_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open transcription file '" + path + "'");
    PrintedTables t;
    try {
        t.raw = ordered_json::parse(in);
        t.commutators = table(t.raw.at("commutators").at("rows"));
        for (const auto& p : t.raw.at("commutators").at("expected_differences"))
            t.commutator_differences.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
        t.quotient = table(t.raw.at("quotient").at("rows"));
        for (const auto& b : t.raw.at("derived_algebra").at("basis")) t.derived_algebra.push_back(vec(b));
        for (const auto& e : t.raw.at("adjoint").at("entries")) {
            lie::PrintedEntry p{e.at("row").get<std::size_t>(), e.at("col").get<std::size_t>(),
                                e.at("printed").get<std::string>(), {}};
            for (const auto& c : e.at("coeffs")) p.coeffs.push_back(parse(c.get<std::string>()));
            t.adjoint.push_back(std::move(p));
            t.adjoint_expected_difference.push_back(e.value("expected_difference", false));
        }
        for (const auto& r : t.raw.at("defining_equations").at("relations"))
            t.defining_relations.emplace_back(r.at("printed").get<std::string>(), parse(r.at("expr").get<std::string>()));
        t.criterion_u_x_xi1_coefficient = parse(t.raw.at("criterion").at("u_x_xi1_coefficient").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("transcription file '" + path + "': " + e.what());
    } catch (const Error& e) {
        throw ConfigError("transcription file '" + path + "': " + e.what());
    }
    return t;
}

}  // namespace gsym::app
