#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qdual {

/// Every failure the library reports. Parse errors carry a line number;
/// validation errors name the violated law and a witness.
enum class ErrorKind {
  Parse,
  UnknownRing,
  NotPrime,
  BadUnit,
  NotCommutative,
  NotAssociative,
  NotLocal,
  Compatibility,
  NotSubmodule,
  RingMismatch,
  NotAComplex,
  NotQuasidualizing,
  BadArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string witness, std::size_t line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }
  /// 1-based source line for parse errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::string witness_;
  std::size_t line_;
};

}  // namespace qdual
