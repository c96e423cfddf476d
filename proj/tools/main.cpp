#include <iostream>

#include "glyphgraph/cli.hpp"

int main(int argc, char** argv) {
  return glyphgraph::cli::run(argc, argv, std::cout, std::cerr);
}
