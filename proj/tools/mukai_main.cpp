#include <iostream>
#include <string>
#include <vector>

#include "mukai/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mukai::cli::run(args, std::cout, std::cerr);
}
