#include <iostream>

#include "schubaut/cli.h"

int main(int argc, char** argv) {
  return schubaut::cli_main(argc, argv, std::cout, std::cerr);
}
