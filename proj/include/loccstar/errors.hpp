#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loccstar {

// Domain failure kinds. InvalidSpec covers malformed inputs and broken
// invariants (rejected at construction); everything else is a legal input
// hitting an operation outside its domain.
enum class ErrorKind {
  NotPositive,
  Singular,
  UnsupportedTail,
  ModuleMismatch,
  UnknownIndex,
  EmptyKernel,
  EigenFailure,
  InvalidSpec,
};

constexpr std::string_view error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::UnsupportedTail: return "UnsupportedTail";
    case ErrorKind::ModuleMismatch: return "ModuleMismatch";
    case ErrorKind::UnknownIndex: return "UnknownIndex";
    case ErrorKind::EmptyKernel: return "EmptyKernel";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace loccstar
