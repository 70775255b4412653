#include "mink/report.hpp"

#include "mink/errors.hpp"

namespace mink {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
    }
    throw InternalError("unhandled check status");
}

void VerificationReport::fail(const std::string& key, nlohmann::json residual) {
    residuals[key] = std::move(residual);
    if (status == CheckStatus::Pass)
        status = CheckStatus::Fail;
}

void VerificationReport::error(const std::string& message) {
    status = CheckStatus::Error;
    details["error"] = message;
}

nlohmann::json VerificationReport::to_json() const {
    return nlohmann::json{{"name", name},
                          {"property", property},
                          {"status", to_string(status)},
                          {"residuals", residuals},
                          {"details", details},
                          {"wall_ms", wall_ms}};
}

} // namespace mink
