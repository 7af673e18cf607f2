#pragma once

// Scalar combination laws shared by the classical and quantum realizations.
//
// A magnitude is the size of a state (mass and charge are proportional to
// it). Combining two states whose uncertainties are correlated by `c` gives
//
//   M = M1 + M2 + 2 sqrt(M1 M2) c,
//
// which factors as (sqrt(M1) + e^{-i theta} sqrt(M2))(sqrt(M1) + e^{+i theta} sqrt(M2))
// with theta = arccos(c), the correlation angle.

#include <complex>

namespace statespace {

class Magnitude {
 public:
  constexpr Magnitude() = default;
  // Throws DomainError unless value is finite and >= 0.
  explicit Magnitude(double value);

  constexpr double value() const { return value_; }

  friend constexpr bool operator==(Magnitude, Magnitude) = default;

 private:
  double value_ = 0.0;
};

class Correlation {
 public:
  // Throws DomainError unless -1 <= value <= 1.
  explicit Correlation(double value);

  // Accepts values up to kClampTolerance outside [-1, 1] and clamps them;
  // inner products overshoot the bound by a few ulps.
  static Correlation clamped(double value);

  double value() const { return value_; }

  static constexpr double kClampTolerance = 1e-12;

 private:
  double value_;
};

class CorrelationAngle {
 public:
  // Radians; throws DomainError unless 0 <= theta <= pi.
  explicit CorrelationAngle(double theta);

  double radians() const { return theta_; }

 private:
  double theta_;
};

Magnitude combined_magnitude(Magnitude m1, Magnitude m2, Correlation c);

// The unreduced complex product; its imaginary part is rounding residue.
std::complex<double> interference_product(Magnitude m1, Magnitude m2,
                                          CorrelationAngle theta);

// Evaluates the complex product form directly. The product is real by
// construction; an imaginary residue above 1e-12 (m1 + m2 + 1) raises
// DomainError.
Magnitude combined_magnitude_factored(Magnitude m1, Magnitude m2,
                                      CorrelationAngle theta);

CorrelationAngle corr_to_angle(Correlation c);
// Raw-double overload applying Correlation::clamped first.
CorrelationAngle corr_to_angle(double c);

Correlation angle_to_corr(CorrelationAngle theta);

}  // namespace statespace
