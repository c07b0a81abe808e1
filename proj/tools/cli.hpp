#ifndef DIAGROUP_CLI_HPP
#define DIAGROUP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace diagroup::cli {

/// Runs one invocation. Exit status: 0 for decided outcomes, 2 when a
/// budget-bounded search returned Unknown, 1 for input errors.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace diagroup::cli

#endif
