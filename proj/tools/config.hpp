#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/casimir.h"

namespace casimir_cli {

struct PlateSpec {
  casimir_plate_kind kind = CASIMIR_PLATE_TRANSPARENT;
  double p1 = 0.0;  // sigma, or lambda_e for delta plates
  double p2 = 0.0;  // lambda_g for delta plates
  bool sweep_slot = false;

  friend bool operator==(const PlateSpec&, const PlateSpec&) = default;
};

enum class SweepScale { Log, Linear };

struct SweepSpec {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  SweepScale scale = SweepScale::Log;

  std::vector<double> grid() const;
  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct RunConfig {
  std::string name;
  std::vector<PlateSpec> plates;
  std::vector<double> gaps;  // empty: unit gaps
  casimir_method method = CASIMIR_METHOD_AUTO;
  std::optional<SweepSpec> sweep;
  std::string output;  // empty: stdout
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::optional<int> max_subdivisions;

  casimir_quadrature quadrature() const;
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0, std::string field = {})
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

// The config file could not be read (as opposed to parsed).
class ConfigIoError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Parses the key = value format (see README). Throws ConfigError with the
// offending line and key.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

// Canonical text form; parse_config(write_config(c)) == c.
std::string write_config(const RunConfig& config);

// Structural checks shared by the parser and presets: plate count, gap
// count, ideal-only method, sweep slots.
void check_config(const RunConfig& config);

}  // namespace casimir_cli
