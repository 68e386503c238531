#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparseres::cli
{

enum ExitCode : int {
    Ok = 0,
    InputFailure = 2,
    ShapeFailure = 3,
    NotHypersurface = 4,
    Internal = 5,
};

// Runs one invocation; args excludes the program name. Input files named
// "-" are read from `in`.
int runCli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace sparseres::cli
