#include "parkpoly/report.hpp"

#include <sstream>

namespace parkpoly {

std::string render_json(const Report& r) {
    json j;
    j["command"] = r.command;
    j["params"] = r.params;
    j["results"] = r.rows;
    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    j["checks"] = checks;
    for (auto it = r.extra.begin(); it != r.extra.end(); ++it) j[it.key()] = it.value();
    return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

std::string render_csv(const Report& r) {
    std::ostringstream os;
    if (r.rows.empty()) return "";
    std::vector<std::string> header;
    for (auto it = r.rows.front().begin(); it != r.rows.front().end(); ++it)
        header.push_back(it.key());
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_escape(header[i]);
    os << "\r\n";
    for (const json& row : r.rows) {
        for (size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << csv_escape(row.contains(header[i]) ? cell(row[header[i]]) : "");
        os << "\r\n";
    }
    return os.str();
}

int report_exit_code(const Report& r) {
    for (const CheckResult& c : r.checks)
        if (!c.pass) return 1;
    return 0;
}

}  // namespace parkpoly
