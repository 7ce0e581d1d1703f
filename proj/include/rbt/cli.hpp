// The `bott` command line front end.

#ifndef RBT_CLI_HPP_
#define RBT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace rbt {

// Exit codes: 0 success, 1 mismatch / undetermined / failed verification,
// 2 usage error. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbt

#endif
