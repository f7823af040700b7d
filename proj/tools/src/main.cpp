#include <iostream>

#include "orthocurrent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto outcome = orthocurrent::cli::run(args);
  (outcome.exit_code == 2 ? std::cerr : std::cout) << outcome.output;
  return outcome.exit_code;
}
