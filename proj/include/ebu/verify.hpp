// Data-driven verification suites behind the `verify` CLI command. Each case
// carries its parameters and a machine-checkable witness (a graph6 string, a
// certificate, or the counts it derived); wall times are attached only on
// request so that default reports are byte-reproducible.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ebu/containment.hpp"

namespace ebu {

struct VerifyCase {
    std::string id;
    nlohmann::ordered_json params;
    std::string outcome;  // "pass" | "fail" | "undecided"
    nlohmann::ordered_json witness;
    double wall_ms = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<VerifyCase> cases;

    int failed() const;
    int undecided() const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int threads = 1;
    bool timings = false;
    SearchLimits limits{};
};

// Built-in parameter grids; `verify --config` swaps in a user file with the
// same shape.
nlohmann::ordered_json default_verify_config();

SuiteReport run_freeness_suite(const nlohmann::ordered_json& config, const VerifyOptions& opts);
SuiteReport run_formulas_suite(const nlohmann::ordered_json& config, const VerifyOptions& opts);
SuiteReport run_families_suite(const nlohmann::ordered_json& config, const VerifyOptions& opts);
SuiteReport run_oracle_equivalence_suite(const nlohmann::ordered_json& config,
                                         const VerifyOptions& opts);
SuiteReport run_saturation_suite(const nlohmann::ordered_json& config, const VerifyOptions& opts);

// Runs the named suite ("freeness", "formulas", "families",
// "oracle-equivalence", "saturation").
SuiteReport run_suite(const std::string& name, const nlohmann::ordered_json& config,
                      const VerifyOptions& opts);

std::vector<std::string> suite_names();

nlohmann::ordered_json report_to_json(const std::vector<SuiteReport>& suites,
                                      const VerifyOptions& opts,
                                      const nlohmann::ordered_json& config);

}  // namespace ebu
