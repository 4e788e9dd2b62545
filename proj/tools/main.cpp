#include <iostream>
#include <string>
#include <vector>

#include "kassembly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return kas::cli::run(args, std::cout, std::cerr);
}
