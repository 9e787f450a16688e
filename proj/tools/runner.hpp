#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"

namespace casimir_cli {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3, kExitIo = 4 };

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::optional<casimir_method> method;
  std::optional<double> rel_tol;
  std::optional<std::string> output;
  unsigned workers = 0;
};

struct StackReport {
  std::string label;
  std::vector<std::string> rows;
  std::string summary;
};

inline constexpr const char* kCsvHeader = "sigma,ratio,per_plate,err_estimate,method";

// One CSV row, 10 significant digits in scientific notation. sigma is left
// empty when the stack has no single conductivity value.
std::string format_row(std::optional<double> sigma, const casimir_result& result);

// Evaluates one stack (or sweep) through the C API. Throws ConfigError for
// invalid stacks and NumericalFailure for convergence/numerical errors.
StackReport evaluate(const RunConfig& config, unsigned workers = 0);

// Header plus all rows. Blocks are preceded by "# <label>" lines when more
// than one stack is rendered.
std::string render_csv(const std::vector<StackReport>& reports);

// Full CLI run: applies overrides, evaluates, writes the CSV to the chosen
// output (or `out`), and prints one summary line per stack to `log` when the
// CSV goes to `out`, to `out` otherwise. Returns an ExitCode.
int run(std::vector<RunConfig> configs, const RunOptions& options, std::ostream& out, std::ostream& log);

}  // namespace casimir_cli
