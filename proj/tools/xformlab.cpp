#include <iostream>
#include <string>
#include <vector>

#include "xform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xform::cli::run(args, std::cin, std::cout);
}
