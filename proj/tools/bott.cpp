#include <iostream>
#include <string>
#include <vector>

#include "rbt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rbt::run_cli(args, std::cout, std::cerr);
}
