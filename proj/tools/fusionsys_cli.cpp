#include <iostream>

#include "fusionsys/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fusionsys::run_cli(args, std::cout, std::cerr);
}
