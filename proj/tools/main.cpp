#include <iostream>

#include "drvkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return drvkit::run_cli(args, std::cout, std::cerr);
}
