#include <iostream>

#include "netdyn/cli.hpp"

int main(int argc, char** argv) {
  return netdyn::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
