#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "parkpoly/checks.hpp"

namespace parkpoly {

using json = nlohmann::json;

/// Machine-readable command output. JSON rendering sorts keys (nlohmann's
/// default object is key-ordered), so identical invocations are
/// byte-identical. Exact values travel as strings: integers in decimal,
/// rationals as "p/q" in lowest terms.
struct Report {
    std::string command;
    json params = json::object();
    std::vector<json> rows;
    std::vector<CheckResult> checks;
    json extra = json::object();  // additional top-level sections, e.g. "polynomial"
};

std::string render_json(const Report& r);

/// RFC 4180 rendering of the tabular section only (header + rows); checks
/// and parameters stay on the JSON path or the exit code.
std::string render_csv(const Report& r);

/// 0 when every check passed, 1 otherwise.
int report_exit_code(const Report& r);

}  // namespace parkpoly
