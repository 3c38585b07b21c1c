#ifndef NILFIBRE_CLI_HPP
#define NILFIBRE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nilfibre {

// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilfibre

#endif  // NILFIBRE_CLI_HPP
