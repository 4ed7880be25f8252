#include <iostream>

#include "heiscay/pipeline.hpp"

int main(int argc, char** argv) {
  return heiscay::cli_main(argc, argv, std::cout, std::cerr);
}
