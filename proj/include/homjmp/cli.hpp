#pragma once

#include <iosfwd>

namespace homjmp {

/// Runs one command line. Exit codes: 0 when every requested check passes,
/// 1 when an identity fails (the failing report goes to `out`), 2 on input
/// or usage errors (diagnostics go to `err`).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homjmp
