#include <iostream>
#include <string>
#include <vector>

#include "verl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return verl::run_command(args, std::cout, std::cerr);
}
