#pragma once

#include <stdexcept>
#include <string>

namespace ulab {

/// Invalid input parameter (out-of-range index, bad panel count, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A detector slice sits on a node of the prepared packet, so the reduced
/// state cannot be normalized.
class NodeSliceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A state or density that should carry unit norm does not.
class NormalizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A formula was evaluated outside the regime where it applies.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ulab
