#include <iostream>
#include <string>
#include <vector>

#include "hopfren/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopfren::runCli(args, std::cout, std::cerr);
}
