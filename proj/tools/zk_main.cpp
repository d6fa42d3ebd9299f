#include <iostream>
#include <vector>

#include "zk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zk::cli::run(args, std::cout, std::cerr);
}
