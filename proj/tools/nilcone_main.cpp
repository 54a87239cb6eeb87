#include <iostream>
#include <string>
#include <vector>

#include "nilcone/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return nilcone::cli::run(args, std::cin, std::cout, std::cerr);
}
