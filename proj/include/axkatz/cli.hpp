#ifndef AXKATZ_CLI_HPP
#define AXKATZ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace axkatz::cli {

/// Runs one command line (arguments after the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 when a verification
/// finds a violation, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace axkatz::cli

#endif  // AXKATZ_CLI_HPP
