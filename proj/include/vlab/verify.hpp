#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "vlab/exact.hpp"

namespace vlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    bool pass = false;
    std::vector<CheckResult> checks;
};

std::vector<std::string> verify_suite_names();

// Runs one of: tables, partition, rh-expansion, recurrence, routes, bounds.
// Throws UnknownSuiteError for anything else.
SuiteReport run_verify_suite(const std::string& name);

nlohmann::ordered_json report_to_json(const SuiteReport& r);

// Paper-printed fixture for the given table id (same shape as make_table).
// Exposed so tests can cross-check cell by cell.
struct TableFixture {
    std::string label;
    std::vector<long long> values; // -1 encodes a dash
};
std::vector<TableFixture> table_fixture(int id);

} // namespace vlab
