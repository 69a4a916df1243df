#pragma once

#include <stdexcept>
#include <string>

namespace dickson {

// Raised when an argument violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised when an iterative method (quadrature, root finding) fails to converge.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dickson
