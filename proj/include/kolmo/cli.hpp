#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kolmo::cli {

// argv without the program name. Exit 0: positive verdict, 1: negative verdict,
// 2: bad input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kolmo::cli
