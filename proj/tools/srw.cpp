#include <iostream>

#include "srw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return srw::cli::run(args, std::cout, std::cerr);
}
