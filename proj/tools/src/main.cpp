#include <iostream>

#include "breuil_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return breuil::cli::run_command(args, std::cout, std::cerr);
}
