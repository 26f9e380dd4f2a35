#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

// Argument outside an operation's domain (n <= 0, x outside (0,1), k < 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// phi(n) <= 0 where a positive supersolution value is required.
class DegenerateSupersolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inertia counts inconsistent with an SPD mass and PSD stiffness matrix.
class BracketFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hardy
