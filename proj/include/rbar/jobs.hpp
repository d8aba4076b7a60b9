#pragma once

#include "rbar/json_io.hpp"

#include <optional>
#include <string>

namespace rbar {

struct JobResult {
    int exit_code = 0;  // 0 pass/success, 1 verification failure, 2 invalid input
    Json envelope;      // {command, inputs_echo, result, diagnostics, seed}
    std::optional<std::string> csv;
};

/// Executes one batch job.  The job object carries {command, payload,
/// seed?}; identical jobs produce byte-identical envelopes.  Schema
/// violations never throw; they surface as exit code 2 with a field-level
/// message in the envelope.
JobResult run_job(const Json& job);

}  // namespace rbar
