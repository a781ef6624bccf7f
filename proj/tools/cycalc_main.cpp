#include <iostream>
#include <string>
#include <vector>

#include "cycalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cycalc::run_cli(args, std::cout, std::cerr);
}
