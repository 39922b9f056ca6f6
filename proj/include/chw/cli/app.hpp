#pragma once

#include <iosfwd>

namespace chw::cli {

// Exit codes of the command-line tool.
constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Runs the `chw` command line: verify, eval, dims, basis.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chw::cli
