#include <iostream>

#include "qbundle/cli.hpp"

int main(int argc, char** argv) {
  return qb::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
