#include <iostream>
#include <string>
#include <vector>

#include "zenosq/cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return zenosq::cli::run_cli(args, std::cout, std::cerr);
}
