#include <iostream>
#include <string>
#include <vector>

#include "cfhom_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cfhom::cli::run_command(args, std::cout, std::cerr);
}
