#include <iostream>
#include <vector>

#include "lieframe/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return lieframe::cli_run(std::move(args), std::cout, std::cerr);
}
