#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxcoh {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix or complex would exceed the configured memory budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (d^2 != 0, failed solve, ...).
/// These indicate bugs, not bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Per-matrix memory cap in bytes. Initialized from COXCOH_BUDGET_MB when set,
// otherwise 2048 MB.
std::size_t matrix_budget_bytes();
void set_matrix_budget_bytes(std::size_t bytes);

// Throws BudgetExceeded when an allocation of `bytes` would exceed the cap.
void charge_matrix_bytes(std::size_t bytes, const std::string& what);

}  // namespace coxcoh
