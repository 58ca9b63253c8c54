#pragma once

#include <stdexcept>
#include <string>

namespace ifsjacobi {

enum class ErrorKind {
  InvalidArgument,
  IndexOutOfRange,
  SizeMismatch,
  RankExceeded,
  DegenerateMeasure,
  DegenerateStep,
  EigenFailure,
  InvalidTarget,
  EmptyWindow,
  ParseError,
  IoError,
};

const char* to_string(ErrorKind kind);

// Every library failure throws Error; kind() is stable for programmatic
// handling and drives the CLI exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ifsjacobi
