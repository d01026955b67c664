#pragma once

#include <iosfwd>

namespace fracnup {

// Entry point of the `fracnup` tool. Returns the process exit code:
// 0 success, 2 precondition/config errors, 3 accuracy errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracnup
