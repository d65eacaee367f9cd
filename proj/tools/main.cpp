#include <iostream>
#include <string>
#include <vector>

#include "orientmap_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orientmap::cli::run(args, std::cout, std::cerr);
}
