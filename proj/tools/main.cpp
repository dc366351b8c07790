#include <iostream>

#include "dimkac/cli.hpp"

int main(int argc, char** argv) {
  return dimkac::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
