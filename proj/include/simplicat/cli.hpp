#ifndef SIMPLICAT_CLI_HPP
#define SIMPLICAT_CLI_HPP

#include <string>
#include <vector>

namespace simplicat {

struct CliResult {
  int exit_code = 0;    // 0 ok, 2 validation, 3 parse, 4 scale exceeded
  std::string out;      // JSON report
  std::string err;      // human-readable diagnostics
};

/** Runs the full pipeline against argv-style arguments (program name
 *  excluded). Never throws; failures map onto the exit-code contract. */
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace simplicat

#endif
