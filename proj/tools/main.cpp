#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv, argv + argc);
  return euler_forge::cli::run(args, std::cout, std::cerr,
                               euler_forge::cli::Environment::from_process());
}
