#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "msim/error.hpp"

namespace msim::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kNoConvergence = 2,
    kNotRepelling = 3,
    kNotMinimal = 4,
    kDegenerate = 5,
    kCheckFailed = 6,
    kUsage = 64,
};

int exit_code_for(ErrorKind kind);

int cmd_solve(const RunConfig& cfg, std::ostream& out);
int cmd_zoom(const RunConfig& cfg, std::ostream& out);
int cmd_table(const RunConfig& cfg, std::ostream& out);
int cmd_poincare(const RunConfig& cfg, std::ostream& out);

/// Full command line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msim::cli
