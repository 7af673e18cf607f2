#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace statespace {

enum class Scenario {
  interference,
  correlation_sweep,
  uncertainty,
  basis_roundtrip,
  group_demo,
};

std::string_view to_string(Scenario s);
std::optional<Scenario> scenario_from_string(std::string_view name);
const std::vector<std::string>& scenario_names();

struct ScenarioConfig {
  Scenario scenario = Scenario::interference;
  std::optional<std::string> out_path;  // nullopt: standard output

  // Quantum position grid, and the x-axis of the classical phase-space grid.
  std::size_t n = 512;
  double x_min = -10.0;
  double x_max = 10.0;

  // Classical phase-space grid.
  std::size_t nx = 512;
  std::size_t np = 128;
  double p_min = -10.0;
  double p_max = 10.0;

  double sigma = 1.0;   // packet width
  double d = 4.0;       // packet separation
  double p0 = 0.0;      // mean momentum
  double phase = 0.0;   // relative phase b of the second packet
  double step = std::numbers::pi / 32.0;  // correlation-sweep increment

  // ConfigError on any violated grid or sweep invariant.
  void validate() const;
};

// Column-oriented numeric table plus the resolved config it came from.
class ScenarioReport {
 public:
  ScenarioReport(std::string scenario, std::vector<std::string> columns);

  const std::string& scenario() const { return scenario_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const {
    return metadata_;
  }

  void add_metadata(std::string key, std::string value);
  // Throws std::invalid_argument if the width differs from columns().size().
  void add_row(std::vector<double> row);

  // Index of a named column; std::out_of_range if absent.
  std::size_t column_index(std::string_view name) const;
  std::vector<double> column(std::string_view name) const;

 private:
  std::string scenario_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

// Runs one named experiment. Every resolved config value is echoed into the
// report metadata. Output is a pure function of the config.
//
//   interference      x, quantum_density, classical_density, p,
//                     quantum_momentum_density, incoherent_momentum_density
//   correlation-sweep b, corr, measured_magnitude, predicted_magnitude,
//                     abs_error
//   uncertainty       sigma, sigma_x, sigma_p, product
//   basis-roundtrip   n, parseval_error, roundtrip_max_abs_error
//   group-demo        M1, M2, M_group, product_error
ScenarioReport run_scenario(const ScenarioConfig& config);

}  // namespace statespace
