#include <iostream>

#include "asqc/cli.hpp"

int main(int argc, char** argv) {
  return asqc::cli_main(argc, argv, std::cout, std::cerr);
}
