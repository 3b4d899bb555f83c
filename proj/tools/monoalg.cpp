#include <iostream>
#include <string>
#include <vector>

#include "monoalg/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return monoalg::run(args, std::cin, std::cout, std::cerr);
}
