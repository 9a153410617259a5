#include <iostream>

#include "dihom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dihom::cli::run(args, std::cout, std::cerr);
}
