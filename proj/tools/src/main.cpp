#include <unistd.h>

#include <iostream>

#include "coquat_tools/cli.hpp"

int main(int argc, char** argv) {
  return coquat::cli::run(argc, argv, std::cin, std::cout, std::cerr, isatty(STDIN_FILENO) != 0);
}
