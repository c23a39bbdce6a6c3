#pragma once

#include <stdexcept>
#include <string>

namespace dml {

/// Argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested exactly at a pole (s = 1 for zeta, s in {0, -1}
/// for the weight transform).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Prime range requested beyond the sieve cap.
class SieveCapacityError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace dml
