#include <iostream>

#include "gsb/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gsb::cli::run(std::move(args), std::cout, std::cerr);
}
