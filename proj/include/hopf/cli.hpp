#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf {

// Exit status: 0 success, 1 bad input, 2 a verification or golden check failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf
