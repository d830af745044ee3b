#include "xxzcorr/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const auto config = xxz::parse_cli(args);
    return xxz::run_cli(config, std::cout, std::cerr);
  } catch (const xxz::CliError& e) {
    (e.exit_code() == 0 ? std::cout : std::cerr) << e.what();
    return e.exit_code();
  }
}
