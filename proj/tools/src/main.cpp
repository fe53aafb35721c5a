#include <iostream>

#include "spweyl_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spweyl::cli::run(args, std::cout, std::cerr);
}
