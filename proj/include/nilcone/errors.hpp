#pragma once

#include <stdexcept>
#include <string>

namespace nilcone {

/// Raised when caller-supplied data violates a documented precondition
/// (degree-slot mismatch, zero input where a nonzero one is required, odd
/// twisting degree, ...). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace nilcone
