#include <iostream>

#include "golden/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return golden::cli::run(args, std::cout, std::cerr);
}
