#pragma once

#include <stdexcept>
#include <string>

namespace dampwave {

/// Invalid problem setup: precondition of a solver or of the scheme violated.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A root finder left its iteration budget without meeting the residual tolerance.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, double lower, double upper)
      : std::runtime_error(what), lower_(lower), upper_(upper) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

/// Half/full step called out of order.
class SequencingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested quantity is outside the parameter range where the estimate is proved.
class OutOfTheoryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InsufficientSignal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dampwave
