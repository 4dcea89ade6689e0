#include <iostream>

#include "grlex_cli/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return grlex::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout,
                         std::cerr);
}
