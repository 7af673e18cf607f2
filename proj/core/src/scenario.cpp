#include "statespace/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "statespace/classical.hpp"
#include "statespace/csv.hpp"
#include "statespace/errors.hpp"
#include "statespace/quantum.hpp"
#include "statespace/state_algebra.hpp"

namespace statespace {

namespace {

constexpr std::size_t kMaxSweepRows = 1'000'000;

struct NamedScenario {
  Scenario id;
  std::string_view name;
};

constexpr NamedScenario kScenarios[] = {
    {Scenario::interference, "interference"},
    {Scenario::correlation_sweep, "correlation-sweep"},
    {Scenario::uncertainty, "uncertainty"},
    {Scenario::basis_roundtrip, "basis-roundtrip"},
    {Scenario::group_demo, "group-demo"},
};

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void echo_config(const ScenarioConfig& c, ScenarioReport& report) {
  report.add_metadata("scenario", std::string(to_string(c.scenario)));
  report.add_metadata("n", std::to_string(c.n));
  report.add_metadata("xmin", format_real(c.x_min));
  report.add_metadata("xmax", format_real(c.x_max));
  report.add_metadata("nx", std::to_string(c.nx));
  report.add_metadata("np", std::to_string(c.np));
  report.add_metadata("pmin", format_real(c.p_min));
  report.add_metadata("pmax", format_real(c.p_max));
  report.add_metadata("sigma", format_real(c.sigma));
  report.add_metadata("d", format_real(c.d));
  report.add_metadata("p0", format_real(c.p0));
  report.add_metadata("b", format_real(c.phase));
  report.add_metadata("step", format_real(c.step));
}

double normal_pdf(double u, double sigma) {
  return std::exp(-0.5 * u * u / (sigma * sigma)) /
         (sigma * std::sqrt(2.0 * std::numbers::pi));
}

// Two packets at -d/2 and +d/2, the second carrying relative phase b.
// Quantum: |psi1 + e^{ib} psi2|^2. Classical: position marginal of the
// density sum of phase-space Gaussians with the same position and momentum
// spreads (sigma_x = sigma, sigma_p = 1 / (2 sigma)). The momentum columns
// give |phi1 + phi2|^2 and the no-interference baseline |phi1|^2 + |phi2|^2.
ScenarioReport run_interference(const ScenarioConfig& c) {
  require(c.nx == c.n, "interference compares on a shared x axis: nx (" +
                           std::to_string(c.nx) + ") must equal n (" +
                           std::to_string(c.n) + ")");
  ScenarioReport report("interference", {"x", "quantum_density",
                                         "classical_density", "p",
                                         "quantum_momentum_density",
                                         "incoherent_momentum_density"});
  echo_config(c, report);

  const quantum::PositionGrid qgrid(c.x_min, c.x_max, c.n);
  const double left = -0.5 * c.d;
  const double right = 0.5 * c.d;
  const auto psi1 = quantum::gaussian_wavepacket(qgrid, left, c.p0, c.sigma);
  const auto psi2 = quantum::apply_phase(
      c.phase, quantum::gaussian_wavepacket(qgrid, right, c.p0, c.sigma));
  const auto psi = quantum::combine(psi1, psi2);
  const auto phi = quantum::to_momentum_basis(psi);
  const auto phi1 = quantum::to_momentum_basis(psi1);
  const auto phi2 = quantum::to_momentum_basis(psi2);

  const classical::PhaseSpaceGrid cgrid(c.x_min, c.x_max, c.p_min, c.p_max,
                                        c.nx, c.np);
  const double sigma_p = 0.5 / c.sigma;
  auto packet = [&](double x0) {
    return classical::ClassicalState::from_function(
        cgrid, [&, x0](double x, double p) {
          return normal_pdf(x - x0, c.sigma) * normal_pdf(p - c.p0, sigma_p);
        });
  };
  const auto rho = classical::combine(packet(left), packet(right));
  const auto marginal = classical::marginal_position(rho);

  const auto amps = psi.amplitudes();
  const auto mom = phi.amplitudes();
  for (std::size_t i = 0; i < c.n; ++i) {
    const double incoherent =
        std::norm(phi1.amplitudes()[i]) + std::norm(phi2.amplitudes()[i]);
    report.add_row({qgrid.x_at(i), std::norm(amps[i]), marginal[i],
                    qgrid.p_at(i), std::norm(mom[i]), incoherent});
  }
  return report;
}

// s against e^{ib} s for b = 0, step, 2 step, ... < 2 pi.
ScenarioReport run_correlation_sweep(const ScenarioConfig& c) {
  ScenarioReport report("correlation-sweep",
                        {"b", "corr", "measured_magnitude",
                         "predicted_magnitude", "abs_error"});
  echo_config(c, report);

  const quantum::PositionGrid grid(c.x_min, c.x_max, c.n);
  const double center = 0.5 * (c.x_min + c.x_max);
  const auto s = quantum::gaussian_wavepacket(grid, center, c.p0, c.sigma);
  const auto m = quantum::magnitude(s);

  const double turn = 2.0 * std::numbers::pi;
  for (std::size_t k = 0;; ++k) {
    const double b = static_cast<double>(k) * c.step;
    if (!(b < turn)) break;
    const auto shifted = quantum::apply_phase(b, s);
    const double measured =
        quantum::magnitude(quantum::combine(s, shifted)).value();
    const Correlation corr(std::cos(b));
    const double predicted =
        combined_magnitude(m, quantum::magnitude(shifted), corr).value();
    report.add_row({b, corr.value(), measured, predicted,
                    std::abs(measured - predicted)});
  }
  return report;
}

// Minimal packets of width sigma * f, f = 0.5, 0.75, ..., 2, each on the
// configured domain scaled by f so the packet-to-grid resolution is fixed.
ScenarioReport run_uncertainty(const ScenarioConfig& c) {
  ScenarioReport report("uncertainty",
                        {"sigma", "sigma_x", "sigma_p", "product"});
  echo_config(c, report);
  report.add_metadata("sweep", "sigma * {0.5, 0.75, ..., 2}, domain scaled by the same factor");

  for (int q = 2; q <= 8; ++q) {
    const double f = 0.25 * q;
    const double sigma = c.sigma * f;
    const quantum::PositionGrid grid(c.x_min * f, c.x_max * f, c.n);
    const double center = 0.5 * (grid.x_min() + grid.x_max());
    const auto s = quantum::gaussian_wavepacket(grid, center, c.p0, sigma);
    const double sx = quantum::basis_stddev(s);
    const double sp = quantum::basis_stddev(quantum::to_momentum_basis(s));
    report.add_row({sigma, sx, sp, sx * sp});
  }
  return report;
}

ScenarioReport run_basis_roundtrip(const ScenarioConfig& c) {
  ScenarioReport report("basis-roundtrip",
                        {"n", "parseval_error", "roundtrip_max_abs_error"});
  echo_config(c, report);
  report.add_metadata("sweep", "n in {64, 256, 1024} and the configured n");

  const std::set<std::size_t> sizes{64, 256, 1024, c.n};
  const double center = 0.5 * (c.x_min + c.x_max);
  for (std::size_t n : sizes) {
    const quantum::PositionGrid grid(c.x_min, c.x_max, n);
    const auto s = quantum::gaussian_wavepacket(grid, center, c.p0, c.sigma);
    const auto phi = quantum::to_momentum_basis(s);
    const auto back = quantum::to_position_basis(phi);
    const double m = quantum::magnitude(s).value();
    const double parseval = std::abs(quantum::magnitude(phi).value() - m) / m;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(back.amplitudes()[i] - s.amplitudes()[i]));
    }
    report.add_row({static_cast<double>(n), parseval, worst});
  }
  return report;
}

// Resized packets on two different grids (n and n/2 cells) grouped into a
// two-system state.
ScenarioReport run_group_demo(const ScenarioConfig& c) {
  ScenarioReport report("group-demo",
                        {"M1", "M2", "M_group", "product_error"});
  echo_config(c, report);
  report.add_metadata("sweep", "resize factors {0.5, 1, 2} x {0.5, 1, 2}; second factor on n/2 cells");

  const quantum::PositionGrid grid1(c.x_min, c.x_max, c.n);
  const quantum::PositionGrid grid2(c.x_min, c.x_max, std::max<std::size_t>(2, c.n / 2));
  const auto base1 = quantum::gaussian_wavepacket(grid1, -0.5 * c.d, c.p0, c.sigma);
  const auto base2 = quantum::gaussian_wavepacket(grid2, 0.5 * c.d, -c.p0, c.sigma);

  constexpr double kFactors[] = {0.5, 1.0, 2.0};
  for (double a1 : kFactors) {
    for (double a2 : kFactors) {
      const auto s1 = quantum::resize(a1, base1);
      const auto s2 = quantum::resize(a2, base2);
      const double m1 = quantum::magnitude(s1).value();
      const double m2 = quantum::magnitude(s2).value();
      const double mg = quantum::magnitude(quantum::group(s1, s2)).value();
      report.add_row({m1, m2, mg, std::abs(mg - m1 * m2)});
    }
  }
  return report;
}

}  // namespace

std::string_view to_string(Scenario s) {
  for (const auto& entry : kScenarios) {
    if (entry.id == s) return entry.name;
  }
  return "unknown";
}

std::optional<Scenario> scenario_from_string(std::string_view name) {
  for (const auto& entry : kScenarios) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : kScenarios) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

void ScenarioConfig::validate() const {
  require(std::isfinite(x_min) && std::isfinite(x_max) && x_max > x_min,
          "need finite xmax > xmin");
  require(std::isfinite(p_min) && std::isfinite(p_max) && p_max > p_min,
          "need finite pmax > pmin");
  require(n >= 2, "n must be >= 2");
  require(nx >= 1 && np >= 1, "nx and np must be >= 1");
  require(std::isfinite(sigma) && sigma > 0.0, "sigma must be positive");
  require(std::isfinite(d), "d must be finite");
  require(std::isfinite(p0), "p0 must be finite");
  require(std::isfinite(phase), "b must be finite");
  require(std::isfinite(step) && step > 0.0, "step must be positive");
  require(2.0 * std::numbers::pi / step <= static_cast<double>(kMaxSweepRows),
          "step too small: sweep would exceed " +
              std::to_string(kMaxSweepRows) + " rows");
}

ScenarioReport::ScenarioReport(std::string scenario,
                               std::vector<std::string> columns)
    : scenario_(std::move(scenario)), columns_(std::move(columns)) {}

void ScenarioReport::add_metadata(std::string key, std::string value) {
  metadata_.emplace_back(std::move(key), std::move(value));
}

void ScenarioReport::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("row has " + std::to_string(row.size()) +
                                " values, report has " +
                                std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

std::size_t ScenarioReport::column_index(std::string_view name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) {
    throw std::out_of_range("no column named " + std::string(name));
  }
  return static_cast<std::size_t>(it - columns_.begin());
}

std::vector<double> ScenarioReport::column(std::string_view name) const {
  const std::size_t idx = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row[idx]);
  return out;
}

ScenarioReport run_scenario(const ScenarioConfig& config) {
  config.validate();
  switch (config.scenario) {
    case Scenario::interference:
      return run_interference(config);
    case Scenario::correlation_sweep:
      return run_correlation_sweep(config);
    case Scenario::uncertainty:
      return run_uncertainty(config);
    case Scenario::basis_roundtrip:
      return run_basis_roundtrip(config);
    case Scenario::group_demo:
      return run_group_demo(config);
  }
  throw ConfigError("unknown scenario");
}

}  // namespace statespace
