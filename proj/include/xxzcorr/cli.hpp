#ifndef XXZCORR_CLI_HPP
#define XXZCORR_CLI_HPP

#include "xxzcorr/closedform.hpp"
#include "xxzcorr/sweep.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xxz {

enum class Command { measures, thermal, dynamics, figure, verify };
enum class OutputFormat { csv, json, text };

struct AxisArg {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

/// Parse outcome that ends the process: usage errors and --help.
class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, std::string message) : std::runtime_error(std::move(message)), exit_code_(exit_code) {}
  [[nodiscard]] int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // computation error or failed verification
inline constexpr int kExitUsage = 2;

struct CliConfig {
  Command command = Command::measures;

  std::optional<double> J, Jz, B, D, T, gamma, t;
  bool ground_state = false;
  std::string initial = "psi1";  // psi1 | psi2 | file
  /// Unset: closedform, except oracle for --ground-state and measures.
  std::optional<Engine> engine;
  std::optional<FormulaVariant> formula;
  std::vector<AxisArg> axes;
  std::optional<OutputFormat> format;
  std::optional<std::string> output;

  std::string figure;
  int points = 201;

  std::optional<std::string> state_file;
  std::optional<std::string> dump_state;
  std::optional<std::string> bell;
};

/// `args` excludes the program name. Throws CliError: exit code 0 with the
/// usage text for --help, kExitUsage otherwise.
[[nodiscard]] CliConfig parse_cli(const std::vector<std::string>& args);

/// Executes a parsed command. Output goes to `out` (or the -o file) only
/// after the whole computation succeeded; diagnostics go to `err`.
int run_cli(const CliConfig& config, std::ostream& out, std::ostream& err);

[[nodiscard]] AxisArg parse_axis(std::string_view text);

}  // namespace xxz

#endif  // XXZCORR_CLI_HPP
