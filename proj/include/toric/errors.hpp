#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Input that violates a documented precondition or schema.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Well-formed input that falls outside what the kernel supports
/// (torsion class groups, non-simplicial Chow rings, non-complete cohomology).
class UnsupportedInput : public std::runtime_error {
 public:
  explicit UnsupportedInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toric
