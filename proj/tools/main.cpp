#include <iostream>
#include <string>
#include <vector>

#include "cli_core.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const motivic::cli::RunResult r = motivic::cli::run(args);
  std::cout << r.output;
  return r.exit_code;
}
