// runner.hpp — subcommand dispatch: deterministic CSV/JSON artifacts per run.
#pragma once

#include "optoring/config.hpp"

namespace optoring {

// exit codes: 0 success, 2 invalid config, 3 instability, 4 solver failure
enum ExitCode : int {
    exit_ok = 0,
    exit_invalid_config = 2,
    exit_instability = 3,
    exit_solver_failure = 4,
};

int run(RunConfig config);

}  // namespace optoring
