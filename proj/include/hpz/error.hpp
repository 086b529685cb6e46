#pragma once

#include <stdexcept>
#include <string>

namespace hpz {

// Input/precondition violations (CLI maps these to exit code 2).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A classification could not be certified at any tested scale (exit code 3).
struct UnresolvedError : std::runtime_error {
  explicit UnresolvedError(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested computation exceeds a resource cap (exit code 4).
struct ResourceCapError : std::runtime_error {
  explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Undefined numeric quantity (frequency with H=0, distance between empty sets).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hpz
