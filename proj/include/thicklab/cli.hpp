#ifndef THICKLAB_CLI_HPP
#define THICKLAB_CLI_HPP

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace thicklab {

// Exit codes: 0 success, 1 invalid input, 2 budget exhausted before an exact
// thickness (thickness subcommand only), 3 invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 3 for InvariantViolation, 1 for everything else.
int exit_code_for(const std::exception& e);

}  // namespace thicklab

#endif
