#ifndef MACKIT_CLI_HPP
#define MACKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mackit::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
// exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mackit::cli

#endif
