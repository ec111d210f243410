#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "vlab/verify.hpp"

using namespace vlab;

TEST_CASE("suite registry") {
    auto names = verify_suite_names();
    REQUIRE(names.size() == 6);
    CHECK(names[0] == "tables");
    CHECK_THROWS_AS(run_verify_suite("no-such-suite"), UnknownSuiteError);
}

TEST_CASE("fast suites pass and serialize") {
    for (const char* name : {"recurrence", "routes", "bounds"}) {
        SuiteReport r = run_verify_suite(name);
        CHECK(r.pass);
        auto j = report_to_json(r);
        CHECK(j["suite"] == name);
        CHECK(j["pass"] == true);
        CHECK(j["checks"].is_array());
        CHECK_FALSE(j["checks"].empty());
        // stable rendering
        CHECK(j.dump() == report_to_json(run_verify_suite(name)).dump());
    }
}

TEST_CASE("report json carries per-check detail") {
    SuiteReport r = run_verify_suite("bounds");
    auto j = report_to_json(r);
    bool found_detail = false;
    for (const auto& check : j["checks"])
        if (check.contains("detail")) found_detail = true;
    CHECK(found_detail);
}
