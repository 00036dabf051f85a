#include <iostream>
#include <string>
#include <vector>

#include "genome/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return genome::cli::run(args, std::cout, std::cerr);
}
