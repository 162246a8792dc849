#include <iostream>

#include "qexcess_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qexcess::cli::run(args, std::cout, std::cerr);
}
