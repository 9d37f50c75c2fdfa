#include <iostream>

#include "rescue/cli/app.hpp"

int main(int argc, char** argv) {
  return rescue::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
