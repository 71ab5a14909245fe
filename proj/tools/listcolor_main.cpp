#include <iostream>
#include <string>
#include <vector>

#include "listcolor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lc::run_cli(args, std::cout, std::cerr);
}
