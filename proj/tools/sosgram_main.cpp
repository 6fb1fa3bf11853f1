#include <iostream>
#include <string>
#include <vector>

#include "sosgram/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sosgram::run_cli(args, std::cout, std::cerr);
}
