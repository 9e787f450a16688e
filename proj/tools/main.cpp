#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "presets.hpp"
#include "runner.hpp"

int main(int argc, char** argv) {
  using namespace casimir_cli;

  CLI::App app{"Casimir interaction energy of parallel delta-function plate stacks"};
  std::string config_path;
  std::string preset_name;
  std::string output;
  std::string method;
  double rel_tol = 0.0;
  bool list = false;
  unsigned workers = 0;

  auto* config_opt = app.add_option("--config", config_path, "Stack configuration file");
  auto* preset_opt = app.add_option("--preset", preset_name, "Named scenario (see --list-presets)");
  config_opt->excludes(preset_opt);
  app.add_option("--output", output, "CSV output path (default: stdout)");
  app.add_option("--method", method, "auto | polylog | quadrature | ideal")
      ->check(CLI::IsMember({"auto", "polylog", "quadrature", "ideal"}));
  auto* tol_opt = app.add_option("--rel-tol", rel_tol, "Relative quadrature tolerance")
                      ->check(CLI::PositiveNumber);
  app.add_option("--workers", workers, "Threads for sigma sweeps (0: all cores)");
  app.add_flag("--list-presets", list, "Print preset names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (list) {
    for (const auto& name : preset_names()) std::cout << name << '\n';
    return kExitOk;
  }

  std::vector<RunConfig> configs;
  try {
    if (!preset_name.empty()) {
      auto p = preset(preset_name);
      if (!p) {
        std::cerr << "config error: unknown preset '" << preset_name << "' (try --list-presets)\n";
        return kExitConfig;
      }
      configs = std::move(*p);
    } else if (!config_path.empty()) {
      configs.push_back(load_config(config_path));
    } else {
      std::cerr << "config error: one of --config or --preset is required\n";
      return kExitConfig;
    }
  } catch (const ConfigIoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  RunOptions options;
  options.workers = workers;
  if (!output.empty()) options.output = output;
  if (!method.empty()) {
    if (method == "auto") options.method = CASIMIR_METHOD_AUTO;
    else if (method == "polylog") options.method = CASIMIR_METHOD_POLYLOG;
    else if (method == "quadrature") options.method = CASIMIR_METHOD_QUADRATURE;
    else options.method = CASIMIR_METHOD_IDEAL;
  }
  if (tol_opt->count() > 0) options.rel_tol = rel_tol;
  return run(std::move(configs), options, std::cout, std::cerr);
}
