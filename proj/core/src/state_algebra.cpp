#include "statespace/state_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "statespace/errors.hpp"

namespace statespace {

Magnitude::Magnitude(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError("magnitude must be finite and nonnegative, got " +
                      std::to_string(value));
  }
}

Correlation::Correlation(double value) : value_(value) {
  if (!(value >= -1.0 && value <= 1.0)) {
    throw DomainError("correlation must lie in [-1, 1], got " +
                      std::to_string(value));
  }
}

Correlation Correlation::clamped(double value) {
  if (!(value >= -1.0 - kClampTolerance && value <= 1.0 + kClampTolerance)) {
    throw DomainError("correlation outside [-1, 1] beyond rounding tolerance: " +
                      std::to_string(value));
  }
  return Correlation(std::clamp(value, -1.0, 1.0));
}

CorrelationAngle::CorrelationAngle(double theta) : theta_(theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("correlation angle must lie in [0, pi], got " +
                      std::to_string(theta));
  }
}

Magnitude combined_magnitude(Magnitude m1, Magnitude m2, Correlation c) {
  const double a = m1.value();
  const double b = m2.value();
  // Mathematically >= 0; only the perfectly destructive case can round below.
  const double m = a + b + 2.0 * std::sqrt(a * b) * c.value();
  return Magnitude(std::max(m, 0.0));
}

std::complex<double> interference_product(Magnitude m1, Magnitude m2,
                                          CorrelationAngle theta) {
  const std::complex<double> r1(std::sqrt(m1.value()), 0.0);
  const double r2 = std::sqrt(m2.value());
  return (r1 + std::polar(r2, -theta.radians())) *
         (r1 + std::polar(r2, theta.radians()));
}

Magnitude combined_magnitude_factored(Magnitude m1, Magnitude m2,
                                      CorrelationAngle theta) {
  const auto product = interference_product(m1, m2, theta);

  const double limit = 1e-12 * (m1.value() + m2.value() + 1.0);
  if (std::abs(product.imag()) > limit) {
    throw DomainError("factored magnitude has imaginary residue " +
                      std::to_string(product.imag()));
  }
  return Magnitude(std::max(product.real(), 0.0));
}

CorrelationAngle corr_to_angle(Correlation c) {
  return CorrelationAngle(std::acos(c.value()));
}

CorrelationAngle corr_to_angle(double c) {
  return corr_to_angle(Correlation::clamped(c));
}

Correlation angle_to_corr(CorrelationAngle theta) {
  return Correlation(std::cos(theta.radians()));
}

}  // namespace statespace
