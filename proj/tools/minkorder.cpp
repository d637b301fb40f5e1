#include <iostream>
#include <string>
#include <vector>

#include "minkorder/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return minkorder::cli::run(args, std::cout, std::cerr);
}
