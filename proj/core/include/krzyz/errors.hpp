#pragma once

#include <stdexcept>
#include <string>

namespace krzyz {

/// Bad user input: malformed configs, out-of-range parameters.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at (or numerically too close to) a pole or vanishing denominator.
class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An iterative method failed to produce a trustworthy answer.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace krzyz
