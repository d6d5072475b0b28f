#pragma once

#include <stdexcept>
#include <string>

namespace tiltkit {

/// Precondition or input-validation failure (bad datum, bad element, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A data file (pcan table, hat map, datum file) is malformed or inconsistent.
class DataFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tiltkit
