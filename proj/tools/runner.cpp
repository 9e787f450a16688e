#include "runner.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

namespace casimir_cli {

namespace {

using StackHandle = std::unique_ptr<casimir_stack, decltype(&casimir_stack_destroy)>;

[[noreturn]] void raise(casimir_status status, const std::string& context) {
  const std::string message = context + ": " + casimir_last_error();
  switch (status) {
    case CASIMIR_ERROR_CONVERGENCE:
    case CASIMIR_ERROR_NUMERICAL:
    case CASIMIR_ERROR_INTERNAL:
    case CASIMIR_ERROR_OUT_OF_MEMORY:
      throw NumericalFailure(message);
    default:
      throw ConfigError(message);
  }
}

StackHandle build(const RunConfig& config, double sweep_sigma) {
  casimir_stack* raw = nullptr;
  if (const auto st = casimir_stack_create(&raw); st != CASIMIR_OK) raise(st, "creating stack");
  StackHandle stack(raw, &casimir_stack_destroy);
  for (std::size_t i = 0; i < config.plates.size(); ++i) {
    const auto& p = config.plates[i];
    const double p1 = p.sweep_slot ? sweep_sigma : p.p1;
    if (const auto st = casimir_stack_add_plate(stack.get(), p.kind, p1, p.p2); st != CASIMIR_OK)
      raise(st, "plate " + std::to_string(i + 1));
  }
  if (const auto st = casimir_stack_set_gaps(stack.get(), config.gaps.data(), config.gaps.size());
      st != CASIMIR_OK)
    raise(st, "gaps");
  return stack;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

// Shared sigma of all fixed conductivity plates, if there is exactly one.
std::optional<double> shared_sigma(const RunConfig& config) {
  std::optional<double> sigma;
  for (const auto& p : config.plates) {
    if (p.kind != CASIMIR_PLATE_CONDUCTIVITY) continue;
    if (sigma && *sigma != p.p1) return std::nullopt;
    sigma = p.p1;
  }
  return sigma;
}

std::string label_of(const RunConfig& config) {
  if (!config.name.empty()) return config.name;
  return "stack(" + std::to_string(config.plates.size()) + " plates)";
}

}  // namespace

std::string format_row(std::optional<double> sigma, const casimir_result& r) {
  std::string row = sigma ? format_number(*sigma) : std::string();
  row += ',' + format_number(r.ratio);
  row += ',' + format_number(r.per_plate);
  row += ',' + format_number(r.error_estimate);
  row += ',';
  row += casimir_method_name(r.method);
  return row;
}

StackReport evaluate(const RunConfig& config, unsigned workers) {
  check_config(config);
  const casimir_quadrature quad = config.quadrature();
  StackReport report;
  report.label = label_of(config);
  std::ostringstream summary;
  summary << report.label << ": N=" << config.plates.size();

  if (!config.sweep) {
    const StackHandle stack = build(config, 0.0);
    casimir_result r{};
    if (const auto st = casimir_energy_ratio(stack.get(), config.method, &quad, &r); st != CASIMIR_OK)
      raise(st, report.label);
    report.rows.push_back(format_row(shared_sigma(config), r));
    char buf[160];
    std::snprintf(buf, sizeof buf, " method=%s ratio=%.6g per_plate=%.6g err=%.2g",
                  casimir_method_name(r.method), r.ratio, r.per_plate, r.error_estimate);
    summary << buf;
  } else {
    const std::vector<double> grid = config.sweep->grid();
    // Template value for the slots; overwritten per grid point.
    const StackHandle stack = build(config, grid.front());
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < config.plates.size(); ++i)
      if (config.plates[i].sweep_slot) slots.push_back(i);
    std::vector<casimir_result> results(grid.size());
    std::size_t failed = 0;
    const auto st = casimir_sweep(stack.get(), grid.data(), grid.size(), slots.data(), slots.size(),
                                  config.method, &quad, workers, results.data(), &failed);
    if (st != CASIMIR_OK) raise(st, report.label);
    for (std::size_t i = 0; i < grid.size(); ++i) report.rows.push_back(format_row(grid[i], results[i]));
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  " method=%s sweep sigma=[%g, %g] points=%zu per_plate from %.6g to %.6g",
                  casimir_method_name(results.front().method), grid.front(), grid.back(), grid.size(),
                  results.front().per_plate, results.back().per_plate);
    summary << buf;
  }
  report.summary = summary.str();
  return report;
}

std::string render_csv(const std::vector<StackReport>& reports) {
  std::string csv = kCsvHeader;
  csv += '\n';
  for (const auto& r : reports) {
    if (reports.size() > 1) csv += "# " + r.label + '\n';
    for (const auto& row : r.rows) csv += row + '\n';
  }
  return csv;
}

int run(std::vector<RunConfig> configs, const RunOptions& options, std::ostream& out, std::ostream& log) {
  std::vector<StackReport> reports;
  try {
    for (auto& c : configs) {
      if (options.method) c.method = *options.method;
      if (options.rel_tol) c.rel_tol = *options.rel_tol;
      reports.push_back(evaluate(c, options.workers));
    }
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalFailure& e) {
    log << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }

  std::string path;
  if (options.output) path = *options.output;
  else if (configs.size() == 1) path = configs.front().output;
  if (path == "-") path.clear();

  const std::string csv = render_csv(reports);
  if (path.empty()) {
    out << csv;
    out.flush();
    if (!out) {
      log << "I/O error: failed writing CSV to stdout\n";
      return kExitIo;
    }
  } else {
    std::ofstream file(path, std::ios::binary);
    file << csv;
    file.close();
    if (!file) {
      log << "I/O error: cannot write '" << path << "'\n";
      return kExitIo;
    }
  }
  std::ostream& summaries = path.empty() ? log : out;
  for (const auto& r : reports) summaries << r.summary << '\n';
  return kExitOk;
}

}  // namespace casimir_cli
