#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace birs {

// Base of every error raised by the library. Data problems (bad input,
// numerically degenerate fits, corrupt files) derive from this; programming
// errors use std::invalid_argument / std::logic_error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BIRS_DEFINE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

BIRS_DEFINE_ERROR(SingularDesign)
BIRS_DEFINE_ERROR(NoConvergence)
BIRS_DEFINE_ERROR(SeparationDetected)
BIRS_DEFINE_ERROR(DimensionMismatch)
BIRS_DEFINE_ERROR(EmptyInput)
BIRS_DEFINE_ERROR(EmptyRegion)
BIRS_DEFINE_ERROR(InconsistentBlocks)
BIRS_DEFINE_ERROR(WindowsDontFit)
BIRS_DEFINE_ERROR(NoTruth)
BIRS_DEFINE_ERROR(VersionMismatch)
BIRS_DEFINE_ERROR(CorruptPayload)

#undef BIRS_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when an algorithmic invariant (threshold monotonicity, containment)
// fails at runtime. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace birs
