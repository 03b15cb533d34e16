#include <iostream>

#include "wonderlat/cli.hpp"

int main(int argc, char** argv) {
  return wonderlat::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
