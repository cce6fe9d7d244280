#include <iostream>
#include <string>
#include <vector>

#include "tgw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tgw::run_cli(args, std::cout, std::cerr);
}
