#pragma once

#include <ostream>

namespace walkmine {

/// Command-line entry point: mine, verify, simulate, convert, gen. Writes
/// results to `out` and diagnostics to `err`.
///
/// Exit codes: mine returns 0 if any program was found and 1 otherwise;
/// verify returns 0 iff the classification matches --expect (0 when no
/// expectation is given) and 1 otherwise; every command returns 2 on input
/// or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace walkmine
