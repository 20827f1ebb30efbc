#include <iostream>
#include <string>
#include <vector>

#include "pmwitness/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pmw::cli::run(args, std::cout, std::cerr);
}
