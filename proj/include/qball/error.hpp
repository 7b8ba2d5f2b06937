#pragma once

#include <stdexcept>
#include <string>

namespace qball {

enum class ErrorKind {
  division_by_zero,
  pole,
  unknown_generator,
  non_canonical,
  index_range,
  size_mismatch,
  unsupported_span,
  precondition,
  parse,
  io,
  step_bound,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every recoverable failure in the engine is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qball
