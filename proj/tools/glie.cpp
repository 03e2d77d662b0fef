#include <iostream>
#include <string>
#include <vector>

#include "glie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return glie::cli::run(args, std::cout, std::cerr, std::cin);
}
