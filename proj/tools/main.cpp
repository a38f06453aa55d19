#include <iostream>
#include <string>
#include <vector>

#include "lchord/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lchord::run_cli(args, std::cout, std::cerr, std::cin);
}
