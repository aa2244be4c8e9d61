#include <iostream>
#include <string>
#include <vector>

#include "sternbp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sternbp::run_cli(args, std::cout, std::cerr);
}
