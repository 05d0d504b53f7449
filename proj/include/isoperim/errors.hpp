#pragma once

#include <stdexcept>
#include <string>

namespace isoperim {

/// Malformed or out-of-contract input (bad ids, negative weights, parse errors).
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structurally valid input for which no solution exists (e.g. more parts
/// than vertices). The CLI maps this to exit code 3.
class InfeasibleError : public std::runtime_error {
public:
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace isoperim
