#pragma once

#include <string>

#include "json.hpp"

namespace mink {

enum class CheckStatus { Pass, Fail, Error };

std::string to_string(CheckStatus s);

// One verified property. `property` states the identity being checked in
// plain text; `residuals` holds the exact nonzero leftovers (serialized
// fields/scalars) and is empty exactly when the check passes; `details`
// carries inputs worth echoing (seeds, sign choices, witness values).
struct VerificationReport {
    std::string name;
    std::string property;
    CheckStatus status = CheckStatus::Pass;
    nlohmann::json residuals = nlohmann::json::object();
    nlohmann::json details = nlohmann::json::object();
    double wall_ms = 0.0;

    bool passed() const { return status == CheckStatus::Pass; }

    // record a nonzero residual; flips status to Fail
    void fail(const std::string& key, nlohmann::json residual);

    // record an execution error (bad input, exception text)
    void error(const std::string& message);

    nlohmann::json to_json() const;
};

} // namespace mink
