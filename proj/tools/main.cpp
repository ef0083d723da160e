#include <iostream>
#include <string>
#include <vector>

#include "gridsign/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gridsign::run(args, std::cout, std::cerr);
}
