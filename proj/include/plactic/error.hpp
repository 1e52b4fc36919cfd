#pragma once

#include <stdexcept>
#include <string>

namespace plactic {

/// Raised when a word, row, column, tableau or other input violates its
/// invariants, or when a textual form cannot be parsed.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(std::string const& what) : std::invalid_argument(what) {}
};

/// Raised when a computation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(std::string const& what)
      : std::runtime_error(what) {}
};

}  // namespace plactic
