#include <iostream>

#include "circulant/cli.hpp"

int main(int argc, char** argv) {
  return circulant::run_cli(argc, argv, std::cout, std::cerr);
}
