#ifndef EPRSIM_CLI_HPP
#define EPRSIM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace eprsim::cli {

/// Run the command-line front end on args (program name excluded).
/// Returns 0 on success, 2 on usage/validation errors, 1 on internal errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eprsim::cli

#endif // EPRSIM_CLI_HPP
