#include <iostream>
#include <string>
#include <vector>

#include "wbayes/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wbayes::run_cli(args, std::cout, std::cerr);
}
