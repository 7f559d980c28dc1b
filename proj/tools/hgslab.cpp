#include <iostream>
#include <string>
#include <vector>

#include "hgslab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hgslab::run_cli(args, std::cout, std::cerr);
}
