#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "statespace/state_algebra.hpp"

namespace statespace::classical {

// Uniform cell-centred grid over (position, momentum).
class PhaseSpaceGrid {
 public:
  PhaseSpaceGrid(double x_min, double x_max, double p_min, double p_max,
                 std::size_t nx, std::size_t np);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double p_min() const { return p_min_; }
  double p_max() const { return p_max_; }
  std::size_t nx() const { return nx_; }
  std::size_t np() const { return np_; }

  double dx() const { return (x_max_ - x_min_) / static_cast<double>(nx_); }
  double dp() const { return (p_max_ - p_min_) / static_cast<double>(np_); }
  double cell_measure() const { return dx() * dp(); }

  // Cell midpoints.
  double x_at(std::size_t i) const;
  double p_at(std::size_t j) const;

  std::size_t size() const { return nx_ * np_; }

  // Bit-identical bounds and counts.
  friend bool operator==(const PhaseSpaceGrid&, const PhaseSpaceGrid&) = default;

 private:
  double x_min_, x_max_, p_min_, p_max_;
  std::size_t nx_, np_;
};

// Nonnegative magnitude density rho(x, p) stored per cell, row-major in x.
// rho is the coefficient of the state against the delta-normalized cell
// basis element, so integrals carry the measure dx dp.
class ClassicalState {
 public:
  using DensityFn = std::function<double(double x, double p)>;

  static ClassicalState zero(const PhaseSpaceGrid& grid);

  // Samples f at cell midpoints. Values in [-1e-15, 0) are round-off and are
  // clipped to 0; anything more negative, or non-finite, is a DomainError.
  static ClassicalState from_function(const PhaseSpaceGrid& grid,
                                      const DensityFn& f);

  // Takes ownership of an nx*np row-major density array.
  static ClassicalState from_densities(const PhaseSpaceGrid& grid,
                                       std::vector<double> rho);

  const PhaseSpaceGrid& grid() const { return grid_; }
  std::span<const double> densities() const { return rho_; }

 private:
  ClassicalState(PhaseSpaceGrid grid, std::vector<double> rho)
      : grid_(grid), rho_(std::move(rho)) {}

  PhaseSpaceGrid grid_;
  std::vector<double> rho_;
};

// Midpoint Riemann sum of rho dx dp. Linear in the state, unlike the vector
// norm which adds contributions quadratically.
Magnitude magnitude(const ClassicalState& s);

// a * rho; a must be finite and >= 0.
ClassicalState resize(double a, const ClassicalState& s);

// Grouping and combining coincide: pointwise density sum on a shared grid.
ClassicalState combine(const ClassicalState& s1, const ClassicalState& s2);

// rho at cell (i, j); IndexError when out of range.
double density_at(const ClassicalState& s, std::size_t i, std::size_t j);

// Position marginal: entry i is sum_j rho(i, j) dp.
std::vector<double> marginal_position(const ClassicalState& s);

}  // namespace statespace::classical
