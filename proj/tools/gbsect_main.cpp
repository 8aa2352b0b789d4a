#include <iostream>
#include <string>
#include <vector>

#include "gbsect/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gbsect::run_command(args, std::cout, std::cerr);
}
