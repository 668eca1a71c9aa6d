#include <iostream>

#include "sgc/cli.hpp"

int main(int argc, char** argv) {
  return sgc::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
