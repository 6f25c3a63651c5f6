#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intspec {

enum class ErrorKind {
  ParseError,
  CycleDetected,
  UnknownLabel,
  DuplicateLabel,
  EmptyShape,
  NotWeaklyDecreasing,
  EmptyDims,
  SizeCapExceeded,
  TooLarge,
  MismatchedPoset,
  RowMismatch,
  DecompositionMismatch,
  NotTriangular,
  SpectrumMismatch,
  TruncationTooLarge,
  NotAPartitionShape,
  IdentityViolated,
  BijectionFailure,
};

std::string_view to_string(ErrorKind kind);

/// All library failures carry a kind so callers (and the CLI exit path) can
/// tell input problems from violated invariants.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace intspec
