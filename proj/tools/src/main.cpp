#include <iostream>
#include <string>
#include <vector>

#include "eulerl2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eulerl2::cli::run_cli(args, std::cout, std::cerr);
}
