#include <iostream>

#include "permsplit/cli/cli.hpp"

int main(int argc, char** argv) {
  const auto result = permsplit::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
