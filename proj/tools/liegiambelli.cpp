#include "liegiambelli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return liegiambelli::cli::run(argc, argv, std::cout, std::cerr);
}
