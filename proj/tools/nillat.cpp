#include <iostream>
#include <string>
#include <vector>

#include "nillat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nillat::run_cli(args, std::cout);
}
