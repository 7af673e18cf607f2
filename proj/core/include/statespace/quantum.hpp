#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "statespace/state_algebra.hpp"

namespace statespace::quantum {

using Complex = std::complex<double>;

// Uniform cell-centred position grid. The conjugate momentum grid is derived
// from it: p_k = 2 pi (k - n/2) / (n dx), spacing dp = 2 pi / (n dx).
class PositionGrid {
 public:
  PositionGrid(double x_min, double x_max, std::size_t n);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t n() const { return n_; }

  double dx() const { return (x_max_ - x_min_) / static_cast<double>(n_); }
  double dp() const;
  double x_at(std::size_t i) const;
  double p_at(std::size_t k) const;

  friend bool operator==(const PositionGrid&, const PositionGrid&) = default;

 private:
  double x_min_, x_max_;
  std::size_t n_;
};

// Only one parametrization is held at a time.
enum class Basis { position, momentum };

const char* to_string(Basis b);

// Complex amplitudes rho(x) e^{i theta(x)} = <x|s> at the grid coordinates of
// the current basis. Amplitudes are densities per sqrt(unit coordinate): the
// magnitude is sum |psi|^2 times the cell measure (dx or dp). A momentum
// state keeps the position grid it was transformed from; its coordinates and
// measure are the conjugate ones.
class QuantumState {
 public:
  using AmplitudeFn = std::function<Complex(double coordinate)>;

  static QuantumState zero(const PositionGrid& grid,
                           Basis basis = Basis::position);
  static QuantumState from_amplitudes(const PositionGrid& grid,
                                      std::vector<Complex> amplitudes,
                                      Basis basis = Basis::position);
  // Samples f at the basis coordinates (x_i or p_k).
  static QuantumState from_function(const PositionGrid& grid,
                                    const AmplitudeFn& f,
                                    Basis basis = Basis::position);
  // Amplitude 1/sqrt(measure) at one cell, times e^{i phase}: unit magnitude.
  static QuantumState point(const PositionGrid& grid, std::size_t index,
                            double phase = 0.0,
                            Basis basis = Basis::position);

  const PositionGrid& grid() const { return grid_; }
  Basis basis() const { return basis_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }

  // Coordinate of cell i in the current basis, and the cell measure.
  double coordinate(std::size_t i) const;
  double measure() const;

 private:
  QuantumState(PositionGrid grid, Basis basis, std::vector<Complex> amps);

  PositionGrid grid_;
  Basis basis_;
  std::vector<Complex> amps_;
};

// Two-system state produced by group(): amplitude (i, j) = psi1_i psi2_j over
// the product of the two factor grids, with measure m1 * m2.
class CompositeState {
 public:
  struct Factor {
    PositionGrid grid;
    Basis basis;
    std::size_t size;
    double measure;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  CompositeState(Factor first, Factor second, std::vector<Complex> amps);

  const Factor& first() const { return first_; }
  const Factor& second() const { return second_; }
  double measure() const { return first_.measure * second_.measure; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(std::size_t i, std::size_t j) const;

 private:
  Factor first_, second_;
  std::vector<Complex> amps_;
};

// <s|s> = sum |psi|^2 * measure.
Magnitude magnitude(const QuantumState& s);
Magnitude magnitude(const CompositeState& s);

// sum conj(psi1) psi2 * measure. IncompatibleStates on grid or basis mismatch.
Complex inner(const QuantumState& s1, const QuantumState& s2);

// |s1> + |s2>; magnitudes follow the interference law.
QuantumState combine(const QuantumState& s1, const QuantumState& s2);
CompositeState combine(const CompositeState& s1, const CompositeState& s2);

// |s1>|s2>. Grids may differ.
CompositeState group(const QuantumState& s1, const QuantumState& s2);

// sqrt(a) |s>; a must be finite and >= 0.
QuantumState resize(double a, const QuantumState& s);

// e^{ib} |s>: same magnitude, shifted correlation against other states.
QuantumState apply_phase(double b, const QuantumState& s);

// Re<s1|s2> / sqrt(M1 M2), the unique choice that makes the combination law
// exact for vector addition. DomainError if either magnitude is zero.
Correlation correlation(const QuantumState& s1, const QuantumState& s2);
CorrelationAngle correlation_angle(const QuantumState& s1,
                                   const QuantumState& s2);

// Position <-> momentum via the unitary centred DFT. BasisError if the input
// is not in the expected basis.
QuantumState to_momentum_basis(const QuantumState& s);
QuantumState to_position_basis(const QuantumState& s);

// resize(1 / M, s). DomainError on the zero state.
QuantumState normalize(const QuantumState& s);

// Normalized e^{-(x-x0)^2 / (4 sigma^2)} e^{i p0 x}. Writes a warning to
// stderr when [x0 - 5 sigma, x0 + 5 sigma] is not inside the grid.
QuantumState gaussian_wavepacket(const PositionGrid& grid, double x0, double p0,
                                 double sigma);

// Mean and standard deviation of the current basis coordinate under
// |psi|^2 measure / M. DomainError on the zero state.
double basis_mean(const QuantumState& s);
double basis_stddev(const QuantumState& s);

}  // namespace statespace::quantum
