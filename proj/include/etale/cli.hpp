#ifndef ETALE_CLI_HPP
#define ETALE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace etale {

/// Runs one command line (without the program name) and writes the single
/// JSON report to the stream, or to the file named by --out.  Returns the
/// process exit code: 0 when every check passes, 1 when a checked property
/// or queried verdict is negative, 2 on usage, budget or precision errors.
int cli_run(const std::vector<std::string>& args, std::ostream& os);

}  // namespace etale

#endif
