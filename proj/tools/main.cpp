#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return mukaistab::cli::run(args, std::cout, std::cerr);
}
