#include <iostream>

#include "umap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return umap::run_cli(args, std::cin, std::cout, std::cerr);
}
