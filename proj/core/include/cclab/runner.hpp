#pragma once

#include <string>
#include <vector>

#include "cclab/config.hpp"
#include "cclab/report.hpp"

namespace cclab {

constexpr const char* kReportSchema = "cclab-report/1";

struct SuiteSection {
    std::string suite;
    std::string group;   // empty for group-independent suites
    std::string status;  // ok | not-applicable | budget | error
    std::string message;
    std::vector<BoundReport> reports;
};

struct ReportBundle {
    std::vector<SuiteSection> sections;
    std::vector<std::string> warnings;  // cache notices; not part of the report body

    SuiteSummary summary() const;
    // 0 when nothing failed, 1 otherwise
    int exit_code() const { return summary().ok() ? 0 : 1; }
};

// Runs every (suite, group) item of the config on a pool of config.workers
// threads. Budget overruns and out-of-scope groups become per-item
// not-applicable sections; internal inconsistencies become failures.
ReportBundle run_suite(const RunConfig& config);

// Serializations. Output is a pure function of the bundle.
std::string to_json(const ReportBundle& b, const RunConfig& config);
std::string to_csv(const ReportBundle& b);
std::string to_text(const ReportBundle& b);
std::string render(const ReportBundle& b, const RunConfig& config);

}  // namespace cclab
