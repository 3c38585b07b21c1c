#include <iostream>

#include "nilfibre/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilfibre::run(args, std::cout, std::cerr);
}
