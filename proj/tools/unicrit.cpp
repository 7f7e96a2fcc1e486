#include <iostream>
#include <string>
#include <vector>

#include "unicrit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return unicrit::run(args, std::cout, std::cerr);
}
