#pragma once

#include "gsym/lie/adjoint.hpp"
#include "gsym/lie/matrix.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace gsym::app {

/// Transcriptions of printed tables and displays, read from
/// data/printed_tables.json. Only ever compared against computed values.
struct PrintedTables {
    nlohmann::ordered_json raw;

    std::vector<std::vector<lie::Vec>> commutators;
    std::vector<std::pair<std::size_t, std::size_t>> commutator_differences;
    std::vector<std::vector<lie::Vec>> quotient;
    std::vector<lie::Vec> derived_algebra;
    std::vector<lie::PrintedEntry> adjoint;
    std::vector<bool> adjoint_expected_difference;
    /// (printed text, expression in xi1/xi2/phi)
    std::vector<std::pair<std::string, Expr>> defining_relations;
    Expr criterion_u_x_xi1_coefficient;

    std::string cite(const std::string& section) const;
};

/// GSYM_DATA_DIR from the environment, else the source tree's data/.
std::string data_dir();
PrintedTables load_printed_tables(const std::string& path = data_dir() + "/printed_tables.json");

}  // namespace gsym::app
