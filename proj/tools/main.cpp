#include <iostream>
#include <vector>

#include "crowdest/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return crowdest::run(args, std::cout, std::cerr);
}
