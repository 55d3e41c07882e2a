#pragma once

#include <stdexcept>
#include <string>

namespace powerpoly {

/// Malformed or invalid user input (game text, numbers, argument values).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested exact computation exceeds the supported problem size.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A geometric routine received a lower-dimensional or empty body.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampling estimator produced no usable samples.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace powerpoly
