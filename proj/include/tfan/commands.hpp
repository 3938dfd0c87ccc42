#pragma once

#include "tfan/fixture.hpp"

namespace tfan {

struct CommandOptions {
    std::string anchor;           // canonical-divisor anchor point; first marked when empty
    bool assert_q_factorial = false;
    std::vector<ZVec> weights;    // toric weights for the downgrade command
    bool machine = false;         // machine-readable (JSON) output
};

// exit_code: 0 ok, 1 failed validation or bad input, 2 result contains
// an Unknown/Undetermined part.
struct CommandResult {
    int exit_code = 0;
    std::string text;     // human-readable report
    std::string machine;  // JSON mirror of the same numbers
};

extern const std::vector<std::string> kCommands;

CommandResult run_command(const std::string& cmd, const Fixture& fx, const CommandOptions& opts);

}  // namespace tfan
