#ifndef ISGX_CLI_COMMANDS_HPP
#define ISGX_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace isgx {

/// Shared options of the CLI subcommands. Exit-code contract: 0 all checks
/// pass, 1 a checked property fails, 2 the input cannot be loaded.
struct CliOptions {
  std::string path;
  std::vector<std::string> family;  // representation names; empty = all
  std::string out;                  // also write the JSON report here
  std::optional<double> tol;        // overrides the scenario tolerance
  std::optional<std::uint64_t> seed;
  bool text = false;                // human-readable summary instead of JSON
};

int cmd_validate(const CliOptions& opt, std::ostream& os, std::ostream& es);
int cmd_crossed(const CliOptions& opt, std::ostream& os, std::ostream& es);
int cmd_equivalence(const CliOptions& opt, std::ostream& os, std::ostream& es);

}  // namespace isgx

#endif  // ISGX_CLI_COMMANDS_HPP
