#pragma once

#include <stdexcept>
#include <string>

namespace latnull {

// Failure categories surfaced by the library. Messages carry the offending
// labels and evaluated terms, so callers can print them verbatim.
enum class ErrorKind {
  CycleError,
  NotALattice,
  BadBounds,
  RedundantCover,
  DuplicateElement,
  UnknownLabel,
  ParseError,
  BadZero,
  NotComparable,
  GenerationExhausted,
  WrongIaSize,
  PreconditionFailed,
  SearchSpaceTooLarge,
  NotApplicable,
};

constexpr const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::BadBounds: return "BadBounds";
    case ErrorKind::RedundantCover: return "RedundantCover";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadZero: return "BadZero";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::WrongIaSize: return "WrongIaSize";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::NotApplicable: return "NotApplicable";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latnull
