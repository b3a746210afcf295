#pragma once

#include <stdexcept>
#include <string>

namespace sbound {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical routine could not certify the requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bracketing search was handed an interval without a sign change.
class NoSignChangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sbound
