#include "vres/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return vres::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
