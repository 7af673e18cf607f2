#include "scenario_args.hpp"

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <optional>
#include <vector>

#include "statespace/csv.hpp"
#include "statespace/errors.hpp"

namespace statespace::cli {

ScenarioConfig parse_args(std::span<const char* const> argv) {
  ScenarioConfig config;
  std::string scenario_name;
  std::string out_path;
  std::optional<std::size_t> nx;

  CLI::App app{"Desk-scale experiments on classical and quantum state spaces",
               "statespace"};
  app.add_option("--scenario", scenario_name, "Experiment to run")
      ->required()
      ->check(CLI::IsMember(scenario_names()));
  app.add_option("--out", out_path, "Output CSV path (default: stdout)");
  app.add_option("--n", config.n, "Quantum grid cells")->capture_default_str();
  app.add_option("--nx", nx, "Classical position cells (default: n)");
  app.add_option("--np", config.np, "Classical momentum cells")
      ->capture_default_str();
  app.add_option("--xmin", config.x_min, "Lower position bound")
      ->capture_default_str();
  app.add_option("--xmax", config.x_max, "Upper position bound")
      ->capture_default_str();
  app.add_option("--pmin", config.p_min, "Lower classical momentum bound")
      ->capture_default_str();
  app.add_option("--pmax", config.p_max, "Upper classical momentum bound")
      ->capture_default_str();
  app.add_option("--sigma", config.sigma, "Wavepacket width")
      ->capture_default_str();
  app.add_option("--d", config.d, "Packet separation")->capture_default_str();
  app.add_option("--p0", config.p0, "Mean packet momentum")
      ->capture_default_str();
  app.add_option("--b", config.phase, "Relative phase of the second packet")
      ->capture_default_str();
  app.add_option("--step", config.step, "Correlation-sweep phase increment")
      ->capture_default_str();

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  config.scenario = *scenario_from_string(scenario_name);
  if (!out_path.empty()) config.out_path = out_path;
  config.nx = nx.value_or(config.n);
  try {
    config.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return config;
}

int run_cli(std::span<const char* const> argv) {
  ScenarioConfig config;
  try {
    config = parse_args(argv);
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "statespace: " << e.what() << "\n"
              << "usage: statespace --scenario {interference|correlation-sweep|"
                 "uncertainty|basis-roundtrip|group-demo} [--out PATH] "
                 "[options]; see --help\n";
    return kExitUsage;
  }

  try {
    write_csv(run_scenario(config), config.out_path);
  } catch (const ConfigError& e) {
    std::cerr << "statespace: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "statespace: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "statespace: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace statespace::cli
