#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parkpoly/checks.hpp"
#include "parkpoly/report.hpp"

using namespace parkpoly;

namespace {

Report sample_report() {
    Report r;
    r.command = "volume";
    r.params = {{"n", 3}, {"a", 1}, {"b", 1}};
    r.rows.push_back({{"formula", "closed-form"}, {"euclidean", "4/1"}, {"normalized", "24"}});
    r.rows.push_back({{"formula", "recursive"}, {"euclidean", "4/1"}, {"normalized", "24"}});
    r.checks.push_back({"volume/formula-agreement", true, "closed and recursive agree"});
    return r;
}

}  // namespace

TEST_CASE("json rendering is deterministic and key-sorted") {
    const Report r = sample_report();
    const std::string once = render_json(r);
    const std::string twice = render_json(r);
    CHECK(once == twice);
    CHECK(once.find("\"checks\"") < once.find("\"command\""));
    CHECK(once.find("\"command\"") < once.find("\"params\""));
    CHECK(once.find("\"normalized\": \"24\"") != std::string::npos);
    CHECK(once.back() == '\n');
}

TEST_CASE("csv rendering is RFC 4180") {
    Report r;
    r.command = "demo";
    r.rows.push_back({{"name", "plain"}, {"value", "7"}});
    r.rows.push_back({{"name", "needs,quoting"}, {"value", "say \"hi\""}});
    const std::string csv = render_csv(r);
    CHECK(csv == "name,value\r\nplain,7\r\n\"needs,quoting\",\"say \"\"hi\"\"\"\r\n");
    CHECK(render_csv(Report{}).empty());
}

TEST_CASE("exit codes track check failures") {
    Report r = sample_report();
    CHECK(report_exit_code(r) == 0);
    r.checks.push_back({"volume/formula-agreement", false, "1 vs 2"});
    CHECK(report_exit_code(r) == 1);
}

TEST_CASE("suite registry") {
    const auto names = suite_names();
    CHECK(names == std::vector<std::string>{"volume", "faces", "series", "weakly", "rational"});
    CHECK_THROWS_AS(run_suite("bogus"), std::domain_error);
    CHECK_THROWS_AS(run_check("volume/bogus"), std::domain_error);

    // the cheapest full suite doubles as an integration smoke test
    for (const CheckResult& c : run_suite("series")) {
        INFO(c.name, ": ", c.details);
        CHECK(c.pass);
    }
}
