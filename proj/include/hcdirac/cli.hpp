// Command-line front end. Flags and config-file keys are the same names:
//
//   hcdirac <command> [--key value ...] [--config file]
//
// The config file is flat "key = value" text, one key per line, '#' comments.
// Flags given on the command line override values from the file.
#ifndef HCDIRAC_CLI_HPP
#define HCDIRAC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hcdirac {

enum class ExitCode : int { pass = 0, fail = 1, precondition = 2 };

struct RunConfig {
  std::string command;  // check-weights | verify | thm5-constant | angular-check | magnetic-verify
  std::string ineq;
  std::optional<double> tau;
  std::optional<double> alpha;
  std::string phi = "linear";
  std::optional<int> n;           // default 3 (2 for magnetic-verify)
  std::optional<int> points;      // default depends on n and command
  double box = 3.0;
  std::optional<double> r_min;    // annulus; default depends on command
  std::optional<double> r_max;
  std::optional<int> trials;      // default 25 (10 for magnetic-verify)
  std::uint64_t seed = 7;
  double slack = 0.02;
  bool massive = false;
  std::optional<bool> resolution_check;  // default on for verify, off for magnetic-verify
  std::string phase = "gaussian";        // gaussian | zero
  double sample_lo = 1e-2;               // interval for sampled infima
  double sample_hi = 1e2;
  int samples_per_decade = 512;
  double sigma = 0.4;                    // angular test-field envelope
  std::string form = "stated";           // stated | corrected
  std::string json_out;
  std::string csv_out;
  std::string field_out;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

const std::vector<std::string>& command_names();

/// Parses argv (argv[0] is the program name). Throws std::invalid_argument on
/// malformed input. Returns nullopt after printing help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Flat key = value text that parse_args reads back to an equal RunConfig.
std::string format_config(const RunConfig& config);

/// HCDIRAC_OUTPUT_DIR, or "." when unset.
std::string default_output_dir();

/// Executes the command, writes artifacts, prints a one-line summary to out
/// and diagnostics to err.
ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run; parse errors map to exit code 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcdirac

#endif  // HCDIRAC_CLI_HPP
