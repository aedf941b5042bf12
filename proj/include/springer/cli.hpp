#ifndef SPRINGER_CLI_HPP
#define SPRINGER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace springer {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

/// Parse `args` (without the program name), run the subcommand and write its
/// report to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// RFC-4180 field: quoted when it contains a comma, quote, CR or LF.
[[nodiscard]] std::string csv_field(const std::string& s);

}  // namespace springer

#endif  // SPRINGER_CLI_HPP
