#pragma once

#include <stdexcept>
#include <string>

namespace geocalc {

/// Base of every error raised by the library. The CLI maps ParseError to exit
/// code 2 and every other Error to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Error class name, e.g. "TableTooSmall".
  virtual const char* kind() const noexcept { return "Error"; }
};

#define GEOCALC_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
    const char* kind() const noexcept override { return #Name; } \
  };

GEOCALC_DEFINE_ERROR(NonPositiveValue)
GEOCALC_DEFINE_ERROR(OverflowError)
GEOCALC_DEFINE_ERROR(GeometricZeroDivisor)
GEOCALC_DEFINE_ERROR(DomainError)
GEOCALC_DEFINE_ERROR(NodeSpacingError)
GEOCALC_DEFINE_ERROR(TableTooSmall)
GEOCALC_DEFINE_ERROR(LengthMismatch)
GEOCALC_DEFINE_ERROR(IndexError)
GEOCALC_DEFINE_ERROR(DegreeError)
GEOCALC_DEFINE_ERROR(InfiniteTailError)
GEOCALC_DEFINE_ERROR(ParseError)

#undef GEOCALC_DEFINE_ERROR

}  // namespace geocalc
