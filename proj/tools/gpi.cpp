#include <iostream>

#include "gpi/cli.hpp"

int main(int argc, char** argv) {
  return gpi::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
