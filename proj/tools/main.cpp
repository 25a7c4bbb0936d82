#include <iostream>
#include <string>
#include <vector>

#include "simplicat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  simplicat::CliResult res = simplicat::run_cli(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
