#pragma once

namespace hdiv {

// Full command-line front end. Returns the process exit code:
// 0 success, 1 failed check, 2 usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace hdiv
