#include "intspec/error.hpp"

namespace intspec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::EmptyShape: return "EmptyShape";
    case ErrorKind::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorKind::EmptyDims: return "EmptyDims";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::MismatchedPoset: return "MismatchedPoset";
    case ErrorKind::RowMismatch: return "RowMismatch";
    case ErrorKind::DecompositionMismatch: return "DecompositionMismatch";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorKind::TruncationTooLarge: return "TruncationTooLarge";
    case ErrorKind::NotAPartitionShape: return "NotAPartitionShape";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::BijectionFailure: return "BijectionFailure";
  }
  return "Unknown";
}

}  // namespace intspec
