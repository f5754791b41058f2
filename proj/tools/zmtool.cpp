#include <iostream>
#include <string>
#include <vector>

#include "zm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zm::cli::run(args, std::cout, std::cerr);
}
