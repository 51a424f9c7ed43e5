#pragma once

#include <json.hpp>

#include <string>

namespace tiledual {

/// Structured result of a single verification: what was checked, the worst
/// residual seen, the threshold it was compared against, and every parameter
/// needed to reproduce the run.
struct CheckReport {
    std::string check;
    bool passed = false;
    double worst = 0.0;
    double threshold = 0.0;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json details = nlohmann::json::object();
};

}  // namespace tiledual
