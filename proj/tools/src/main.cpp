#include <iostream>

#include "centext/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return centext::cli::execute(args, std::cout, std::cerr);
}
