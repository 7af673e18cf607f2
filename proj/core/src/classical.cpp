#include "statespace/classical.hpp"

#include <cmath>
#include <string>

#include "statespace/errors.hpp"

namespace statespace::classical {

PhaseSpaceGrid::PhaseSpaceGrid(double x_min, double x_max, double p_min,
                               double p_max, std::size_t nx, std::size_t np)
    : x_min_(x_min), x_max_(x_max), p_min_(p_min), p_max_(p_max), nx_(nx),
      np_(np) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw DomainError("phase-space grid needs finite x_max > x_min");
  }
  if (!std::isfinite(p_min) || !std::isfinite(p_max) || !(p_max > p_min)) {
    throw DomainError("phase-space grid needs finite p_max > p_min");
  }
  if (nx == 0 || np == 0) {
    throw DomainError("phase-space grid needs nx >= 1 and np >= 1");
  }
  if (!(cell_measure() > 0.0)) {
    throw DomainError("phase-space cell measure underflows to zero");
  }
}

double PhaseSpaceGrid::x_at(std::size_t i) const {
  return x_min_ + (static_cast<double>(i) + 0.5) * dx();
}

double PhaseSpaceGrid::p_at(std::size_t j) const {
  return p_min_ + (static_cast<double>(j) + 0.5) * dp();
}

ClassicalState ClassicalState::zero(const PhaseSpaceGrid& grid) {
  return ClassicalState(grid, std::vector<double>(grid.size(), 0.0));
}

ClassicalState ClassicalState::from_function(const PhaseSpaceGrid& grid,
                                             const DensityFn& f) {
  constexpr double kRoundOff = 1e-15;
  std::vector<double> rho(grid.size());
  for (std::size_t i = 0; i < grid.nx(); ++i) {
    const double x = grid.x_at(i);
    for (std::size_t j = 0; j < grid.np(); ++j) {
      const double v = f(x, grid.p_at(j));
      if (!std::isfinite(v) || v < -kRoundOff) {
        throw DomainError("density function is not a magnitude density at (" +
                          std::to_string(x) + ", " +
                          std::to_string(grid.p_at(j)) +
                          "): " + std::to_string(v));
      }
      rho[i * grid.np() + j] = v > 0.0 ? v : 0.0;
    }
  }
  return ClassicalState(grid, std::move(rho));
}

ClassicalState ClassicalState::from_densities(const PhaseSpaceGrid& grid,
                                              std::vector<double> rho) {
  if (rho.size() != grid.size()) {
    throw DomainError("density array has " + std::to_string(rho.size()) +
                      " entries, grid has " + std::to_string(grid.size()));
  }
  for (double v : rho) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("densities must be finite and nonnegative");
    }
  }
  return ClassicalState(grid, std::move(rho));
}

Magnitude magnitude(const ClassicalState& s) {
  double sum = 0.0;
  for (double v : s.densities()) sum += v;
  return Magnitude(sum * s.grid().cell_measure());
}

ClassicalState resize(double a, const ClassicalState& s) {
  if (!std::isfinite(a) || a < 0.0) {
    throw DomainError("classical resize factor must be finite and >= 0, got " +
                      std::to_string(a));
  }
  std::vector<double> rho(s.densities().begin(), s.densities().end());
  for (double& v : rho) v *= a;
  return ClassicalState::from_densities(s.grid(), std::move(rho));
}

ClassicalState combine(const ClassicalState& s1, const ClassicalState& s2) {
  if (!(s1.grid() == s2.grid())) {
    throw IncompatibleStates("classical states live on different grids");
  }
  const auto a = s1.densities();
  const auto b = s2.densities();
  std::vector<double> rho(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) rho[k] = a[k] + b[k];
  return ClassicalState::from_densities(s1.grid(), std::move(rho));
}

double density_at(const ClassicalState& s, std::size_t i, std::size_t j) {
  const auto& g = s.grid();
  if (i >= g.nx() || j >= g.np()) {
    throw IndexError("cell (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") outside " + std::to_string(g.nx()) + "x" +
                     std::to_string(g.np()) + " grid");
  }
  return s.densities()[i * g.np() + j];
}

std::vector<double> marginal_position(const ClassicalState& s) {
  const auto& g = s.grid();
  const auto rho = s.densities();
  std::vector<double> out(g.nx(), 0.0);
  for (std::size_t i = 0; i < g.nx(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < g.np(); ++j) sum += rho[i * g.np() + j];
    out[i] = sum * g.dp();
  }
  return out;
}

}  // namespace statespace::classical
