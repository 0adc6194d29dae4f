#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mqt {

/// Invalid input: mismatched fields, dimension mismatches, violated preconditions.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured budget. Carries the bound that was hit.
class BudgetError : public std::runtime_error {
  public:
    BudgetError(const std::string& message, std::uint64_t budget)
        : std::runtime_error(message), budget_(budget) {}
    std::uint64_t budget() const { return budget_; }

  private:
    std::uint64_t budget_;
};

/// A verified internal invariant failed. Indicates a library bug, never user error.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace mqt
