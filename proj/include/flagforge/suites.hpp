#pragma once
#include "groups.hpp"
#include "jsonio.hpp"

// Property-verification harness: named exhaustive / property suites over small
// exact fields, shared by the CLI `verify` command and the acceptance tests.
// Every suite is deterministic given its parameters; sampled suites draw from
// a seeded generator, enumerative suites charge their work against a budget
// (params.max_enum, or the FLAGFORGE_MAX_ENUM environment variable) and throw
// BoundError instead of exploding.

namespace flagforge {

struct SuiteParams {
    std::string field = "f2"; // "f2" | "f3" | "q"
    int d = 3;                // module rank, 1..4
    unsigned long long seed = 2023;
    long long max_enum = 0; // 0: FLAGFORGE_MAX_ENUM env var, else 4000000
    int trials = 500;       // sample count for seeded suites
};

struct SuiteFailure {
    std::string what; // case descriptor
    std::string expected;
    std::string actual;
    friend bool operator==(const SuiteFailure&, const SuiteFailure&) = default;
};

struct VerifyReport {
    std::string suite;
    long long cases = 0;
    std::vector<SuiteFailure> failures; // at most 100 recorded
    long long failures_total = 0;
    long long millis = 0;
    bool passed() const { return failures_total == 0; }
};

// canonical order; run_suite also accepts the alias "gl3-limit-example"
std::vector<std::string> suite_names();
VerifyReport run_suite(const std::string& name, const SuiteParams& = {});
Json report_to_json(const VerifyReport&);

} // namespace flagforge
