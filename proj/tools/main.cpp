#include <iostream>

#include "qsheaf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qsheaf::run_cli(args, std::cin, std::cout, std::cerr);
}
