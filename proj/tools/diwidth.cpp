#include <iostream>
#include <vector>

#include "diwidth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return diwidth::cli::run(std::move(args), std::cout, std::cerr);
}
