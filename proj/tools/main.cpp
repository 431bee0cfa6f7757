#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  return ramopuc::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
