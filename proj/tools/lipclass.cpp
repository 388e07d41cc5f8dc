#include <iostream>
#include <string>
#include <vector>

#include "lipclass/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lipclass::run(args, std::cout, std::cerr);
}
