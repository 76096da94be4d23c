#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace gsym::app {

struct CheckResult {
    std::string name;
    std::string verdict;
    std::string detail;
    /// The verdict is the expected one.
    bool matched = true;
};

struct Discrepancy {
    std::string cite;
    std::string printed;
    std::string computed;
};

enum class Status { ok, mismatch, error };

std::string status_name(Status s);
int exit_code(Status s);

struct Report {
    std::string command;
    nlohmann::ordered_json config;
    /// Human-readable lines printed before the results.
    std::vector<std::string> text;
    std::vector<CheckResult> results;
    std::vector<Discrepancy> discrepancies;

    void add(std::string name, std::string verdict, std::string detail, bool matched = true);
    /// ok iff every result matched.
    Status status() const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

}  // namespace gsym::app
