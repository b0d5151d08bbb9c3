#pragma once

#include <iosfwd>

namespace coreparts {

/// Command-line entry point. Exit codes: 0 success, 1 verification failure,
/// 2 usage error or invalid parameters.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace coreparts
