#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace cochain {

struct CommandOutcome {
    int exit_code = 0; // 0 ok, 2 validation error, 3 attack infeasible/degenerate
    std::string json;  // the full report, deterministic byte-for-byte
};

// The CLI's engine: dispatch one subcommand against a scenario (absent for
// scenario-free commands such as "dh" and "cost"). Flags are key=value
// strings from the command line. Never throws; failures become exit code 2
// with an {"error": {code, message}} report.
CommandOutcome run_command(const std::optional<Scenario>& scenario, const std::string& command,
                           const std::map<std::string, std::string>& flags);

const std::vector<std::string>& command_names();

} // namespace cochain
