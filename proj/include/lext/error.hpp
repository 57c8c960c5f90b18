#pragma once

#include <stdexcept>
#include <string>

namespace lext {

// Raised when an input or precondition violates a named invariant. The
// invariant id (e.g. "poset.acyclic") is stable and appears in CLI output.
class Error : public std::runtime_error {
 public:
  Error(std::string invariant, const std::string& message)
      : std::runtime_error(invariant + ": " + message),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

// Monoid closure ran past its element budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace lext
