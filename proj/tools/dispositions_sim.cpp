#include <iostream>
#include <string>
#include <vector>

#include "dispositions/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = dispositions::cli;
  cli::RunOptions options;
  try {
    options = cli::options_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli::run(args, std::cout, std::cerr, options);
}
