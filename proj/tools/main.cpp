#include <iostream>
#include <string>
#include <vector>

#include "strew/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return strew::run_command(args, std::cout, std::cerr);
}
