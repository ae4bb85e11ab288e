#include <iostream>
#include <string>
#include <vector>

#include "liebider/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liebider::run_command(args, std::cout, std::cerr);
}
