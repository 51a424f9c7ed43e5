#pragma once

#include "tiledual/serialization.hpp"

namespace tiledual {

enum class RunStatus {
    Ok = 0,           // consistent / true verdicts
    CheckFailed = 1,  // a check reported a violation, inconsistency or an unreachable tolerance
    InvalidInput = 2,
};

struct RunOutcome {
    RunStatus status = RunStatus::Ok;
    std::string output;  // report JSON, or CSV text for "sweep"
};

/// Executes one command against a parsed problem. Input/validation problems
/// throw std::invalid_argument; mathematical failures (false verdicts,
/// violated preconditions, unreachable tolerances) come back as
/// RunStatus::CheckFailed together with a report describing them.
RunOutcome run_command(const Problem& problem, const RunConfig& config);

const char* version_string();

}  // namespace tiledual
