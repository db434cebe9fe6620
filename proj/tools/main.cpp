#include <iostream>

#include "kolmo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kolmo::cli::run(args, std::cout, std::cerr);
}
