#include "gsym/app/report.hpp"

#include <algorithm>

namespace gsym::app {

std::string status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::mismatch: return "mismatch";
        case Status::error: return "error";
    }
    return "error";
}

int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::mismatch: return 1;
        case Status::error: return 2;
    }
    return 2;
}

void Report::add(std::string name, std::string verdict, std::string detail, bool matched) {
    results.push_back({std::move(name), std::move(verdict), std::move(detail), matched});
}

Status Report::status() const {
    const bool all = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.matched; });
    return all ? Status::ok : Status::mismatch;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["config"] = config;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results) j["results"].push_back({{"name", r.name}, {"verdict", r.verdict}, {"detail", r.detail}});
    j["discrepancies"] = nlohmann::ordered_json::array();
    for (const auto& d : discrepancies)
        j["discrepancies"].push_back({{"cite", d.cite}, {"printed", d.printed}, {"computed", d.computed}});
    j["status"] = status_name(status());
    return j;
}

std::string Report::to_text() const {
    std::string out = "== " + command + " ==\n";
    for (const auto& line : text) out += line + "\n";
    if (!text.empty()) out += "\n";
    for (const auto& r : results) {
        out += std::string(r.matched ? "  [ok]       " : "  [MISMATCH] ") + r.name + ": " + r.verdict;
        if (!r.detail.empty()) out += "  (" + r.detail + ")";
        out += "\n";
    }
    if (!discrepancies.empty()) {
        out += "\ndiscrepancies against the printed values:\n";
        for (const auto& d : discrepancies) {
            out += "  - " + d.cite + "\n";
            out += "      printed:  " + d.printed + "\n";
            out += "      computed: " + d.computed + "\n";
        }
    }
    out += "\nstatus: " + status_name(status()) + "\n";
    return out;
}

}  // namespace gsym::app
