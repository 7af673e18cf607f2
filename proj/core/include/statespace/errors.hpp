#pragma once

#include <stdexcept>

namespace statespace {

// Value outside the mathematical domain of an operation (negative magnitude,
// correlation outside [-1, 1], angle outside [0, pi], zero-norm state, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two states that cannot be combined: different grids or parametrizations.
class IncompatibleStates : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation applied to a state in the wrong parametrization.
class BasisError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Scenario configuration that violates a grid or sweep invariant.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace statespace
