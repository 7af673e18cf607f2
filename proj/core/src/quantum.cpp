#include "statespace/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

#include "statespace/errors.hpp"
#include "statespace/fourier.hpp"

namespace statespace::quantum {

namespace {

void require_compatible(const QuantumState& s1, const QuantumState& s2) {
  if (!(s1.grid() == s2.grid())) {
    throw IncompatibleStates("quantum states live on different grids");
  }
  if (s1.basis() != s2.basis()) {
    throw IncompatibleStates(std::string("quantum states are in different bases (") +
                             to_string(s1.basis()) + " vs " +
                             to_string(s2.basis()) + ")");
  }
}

double norm_sum(std::span<const Complex> amps) {
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  return sum;
}

CompositeState::Factor factor_of(const QuantumState& s) {
  return {s.grid(), s.basis(), s.size(), s.measure()};
}

}  // namespace

PositionGrid::PositionGrid(double x_min, double x_max, std::size_t n)
    : x_min_(x_min), x_max_(x_max), n_(n) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw DomainError("position grid needs finite x_max > x_min");
  }
  if (n < 2) {
    throw DomainError("position grid needs n >= 2");
  }
}

double PositionGrid::dp() const {
  return 2.0 * std::numbers::pi / (static_cast<double>(n_) * dx());
}

double PositionGrid::x_at(std::size_t i) const {
  return x_min_ + (static_cast<double>(i) + 0.5) * dx();
}

double PositionGrid::p_at(std::size_t k) const {
  return dp() * (static_cast<double>(k) - static_cast<double>(n_) / 2.0);
}

const char* to_string(Basis b) {
  return b == Basis::position ? "position" : "momentum";
}

QuantumState::QuantumState(PositionGrid grid, Basis basis,
                           std::vector<Complex> amps)
    : grid_(grid), basis_(basis), amps_(std::move(amps)) {
  if (amps_.size() != grid_.n()) {
    throw DomainError("amplitude array has " + std::to_string(amps_.size()) +
                      " entries, grid has " + std::to_string(grid_.n()));
  }
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw DomainError("amplitudes must be finite");
    }
  }
}

QuantumState QuantumState::zero(const PositionGrid& grid, Basis basis) {
  return QuantumState(grid, basis, std::vector<Complex>(grid.n()));
}

QuantumState QuantumState::from_amplitudes(const PositionGrid& grid,
                                           std::vector<Complex> amplitudes,
                                           Basis basis) {
  return QuantumState(grid, basis, std::move(amplitudes));
}

QuantumState QuantumState::from_function(const PositionGrid& grid,
                                         const AmplitudeFn& f, Basis basis) {
  std::vector<Complex> amps(grid.n());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = f(basis == Basis::position ? grid.x_at(i) : grid.p_at(i));
  }
  return QuantumState(grid, basis, std::move(amps));
}

QuantumState QuantumState::point(const PositionGrid& grid, std::size_t index,
                                 double phase, Basis basis) {
  if (index >= grid.n()) {
    throw IndexError("point state index " + std::to_string(index) +
                     " outside grid of " + std::to_string(grid.n()));
  }
  const double measure = basis == Basis::position ? grid.dx() : grid.dp();
  std::vector<Complex> amps(grid.n());
  amps[index] = std::polar(1.0 / std::sqrt(measure), phase);
  return QuantumState(grid, basis, std::move(amps));
}

double QuantumState::coordinate(std::size_t i) const {
  return basis_ == Basis::position ? grid_.x_at(i) : grid_.p_at(i);
}

double QuantumState::measure() const {
  return basis_ == Basis::position ? grid_.dx() : grid_.dp();
}

CompositeState::CompositeState(Factor first, Factor second,
                               std::vector<Complex> amps)
    : first_(first), second_(second), amps_(std::move(amps)) {
  if (amps_.size() != first_.size * second_.size) {
    throw DomainError("composite amplitude array does not match factor sizes");
  }
}

Complex CompositeState::amplitude(std::size_t i, std::size_t j) const {
  if (i >= first_.size || j >= second_.size) {
    throw IndexError("composite index (" + std::to_string(i) + ", " +
                     std::to_string(j) + ") out of range");
  }
  return amps_[i * second_.size + j];
}

Magnitude magnitude(const QuantumState& s) {
  return Magnitude(norm_sum(s.amplitudes()) * s.measure());
}

Magnitude magnitude(const CompositeState& s) {
  return Magnitude(norm_sum(s.amplitudes()) * s.measure());
}

Complex inner(const QuantumState& s1, const QuantumState& s2) {
  require_compatible(s1, s2);
  const auto a = s1.amplitudes();
  const auto b = s2.amplitudes();
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc * s1.measure();
}

QuantumState combine(const QuantumState& s1, const QuantumState& s2) {
  require_compatible(s1, s2);
  const auto a = s1.amplitudes();
  const auto b = s2.amplitudes();
  std::vector<Complex> sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  return QuantumState::from_amplitudes(s1.grid(), std::move(sum), s1.basis());
}

CompositeState combine(const CompositeState& s1, const CompositeState& s2) {
  if (!(s1.first() == s2.first()) || !(s1.second() == s2.second())) {
    throw IncompatibleStates("composite states have different factor spaces");
  }
  const auto a = s1.amplitudes();
  const auto b = s2.amplitudes();
  std::vector<Complex> sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  return CompositeState(s1.first(), s1.second(), std::move(sum));
}

CompositeState group(const QuantumState& s1, const QuantumState& s2) {
  const auto a = s1.amplitudes();
  const auto b = s2.amplitudes();
  std::vector<Complex> prod(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i * b.size() + j] = a[i] * b[j];
  }
  return CompositeState(factor_of(s1), factor_of(s2), std::move(prod));
}

QuantumState resize(double a, const QuantumState& s) {
  if (!std::isfinite(a) || a < 0.0) {
    throw DomainError("quantum resize factor must be finite and >= 0, got " +
                      std::to_string(a));
  }
  const double root = std::sqrt(a);
  std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  for (auto& v : amps) v *= root;
  return QuantumState::from_amplitudes(s.grid(), std::move(amps), s.basis());
}

QuantumState apply_phase(double b, const QuantumState& s) {
  if (!std::isfinite(b)) {
    throw DomainError("phase must be finite");
  }
  const Complex rotation = std::polar(1.0, b);
  std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  for (auto& v : amps) v *= rotation;
  return QuantumState::from_amplitudes(s.grid(), std::move(amps), s.basis());
}

Correlation correlation(const QuantumState& s1, const QuantumState& s2) {
  const Complex overlap = inner(s1, s2);
  const double m1 = magnitude(s1).value();
  const double m2 = magnitude(s2).value();
  if (m1 == 0.0 || m2 == 0.0) {
    throw DomainError("correlation is undefined for a zero-magnitude state");
  }
  return Correlation::clamped(overlap.real() / std::sqrt(m1 * m2));
}

CorrelationAngle correlation_angle(const QuantumState& s1,
                                   const QuantumState& s2) {
  return corr_to_angle(correlation(s1, s2));
}

QuantumState to_momentum_basis(const QuantumState& s) {
  if (s.basis() != Basis::position) {
    throw BasisError("to_momentum_basis expects a position-basis state");
  }
  const auto& g = s.grid();
  const CenteredDft dft(g.x_min(), g.dx(), g.n());
  std::vector<Complex> phi(g.n());
  dft.forward(s.amplitudes(), phi);
  return QuantumState::from_amplitudes(g, std::move(phi), Basis::momentum);
}

QuantumState to_position_basis(const QuantumState& s) {
  if (s.basis() != Basis::momentum) {
    throw BasisError("to_position_basis expects a momentum-basis state");
  }
  const auto& g = s.grid();
  const CenteredDft dft(g.x_min(), g.dx(), g.n());
  std::vector<Complex> psi(g.n());
  dft.inverse(s.amplitudes(), psi);
  return QuantumState::from_amplitudes(g, std::move(psi), Basis::position);
}

QuantumState normalize(const QuantumState& s) {
  const double m = magnitude(s).value();
  if (m == 0.0) {
    throw DomainError("cannot normalize the zero state");
  }
  return resize(1.0 / m, s);
}

QuantumState gaussian_wavepacket(const PositionGrid& grid, double x0, double p0,
                                 double sigma) {
  if (!std::isfinite(sigma) || !(sigma > 0.0)) {
    throw DomainError("wavepacket width must be positive, got " +
                      std::to_string(sigma));
  }
  if (x0 - 5.0 * sigma < grid.x_min() || x0 + 5.0 * sigma > grid.x_max()) {
    std::cerr << "warning: wavepacket [x0 - 5 sigma, x0 + 5 sigma] = ["
              << x0 - 5.0 * sigma << ", " << x0 + 5.0 * sigma
              << "] extends past the grid [" << grid.x_min() << ", "
              << grid.x_max() << "]\n";
  }
  const double inv_four_var = 1.0 / (4.0 * sigma * sigma);
  const auto packet = QuantumState::from_function(grid, [&](double x) {
    const double u = x - x0;
    return std::polar(std::exp(-u * u * inv_four_var), p0 * x);
  });
  return normalize(packet);
}

double basis_mean(const QuantumState& s) {
  const double total = norm_sum(s.amplitudes());
  if (total == 0.0) {
    throw DomainError("mean coordinate is undefined for the zero state");
  }
  const auto amps = s.amplitudes();
  double first = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    first += s.coordinate(i) * std::norm(amps[i]);
  }
  return first / total;
}

double basis_stddev(const QuantumState& s) {
  const double mean = basis_mean(s);
  const auto amps = s.amplitudes();
  double second = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double w = std::norm(amps[i]);
    const double u = s.coordinate(i) - mean;
    second += u * u * w;
    total += w;
  }
  return std::sqrt(second / total);
}

}  // namespace statespace::quantum
