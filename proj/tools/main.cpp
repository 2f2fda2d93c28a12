#include <iostream>
#include <string>
#include <vector>

#include "ctxdist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ctxdist::run(args, std::cout, std::cerr);
}
