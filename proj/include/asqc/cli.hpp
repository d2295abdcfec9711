#pragma once

#include <iosfwd>

namespace asqc {

/// Full command-line driver (subcommands: correlations, thermal, sweep,
/// transitions, verify, asympt).  Returns the process exit code: 0 on
/// success, 1 on verification or output failure, 2 on usage errors.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace asqc
