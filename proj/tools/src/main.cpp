#include <iostream>

#include "foldse_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return foldse::cli::run_cli(args, std::cout, std::cerr);
}
