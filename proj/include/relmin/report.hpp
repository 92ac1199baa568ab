#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace relmin {

using Json = nlohmann::ordered_json;

/// Outcome of one checked property: how many samples were checked, how many
/// failed, and the counterexample with the smallest sample index, if any.
struct PropertyResult {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::optional<Json> counterexample;

    bool passed() const { return failed == 0; }
};

/// A named collection of property results.
struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool all_passed() const {
        for (const auto& p : properties)
            if (!p.passed()) return false;
        return true;
    }
    /// 0 when every property passed, 1 otherwise.
    int exit_code() const { return all_passed() ? 0 : 1; }
};

Json report_to_json(const SuiteReport& report);

}  // namespace relmin
