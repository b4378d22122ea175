#include <iostream>
#include <string>
#include <vector>

#include "symmp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return symmp::cli::run(args, std::cout, std::cerr);
}
