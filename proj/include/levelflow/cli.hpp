#ifndef LEVELFLOW_CLI_HPP
#define LEVELFLOW_CLI_HPP

#include <iosfwd>

namespace levelflow::cli {

/// Exit codes: 0 success, 1 violated check, 2 usage error, 3 numerical
/// failure. `out` receives everything that would go to stdout.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace levelflow::cli

#endif
