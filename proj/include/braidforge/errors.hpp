#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

/// Base class for all domain errors raised by the library.
/// The CLI maps these to exit code 1; malformed flags are exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

struct InvalidStrandCount : Error {
  using Error::Error;
};

struct InvalidLetter : Error {
  using Error::Error;
};

struct ShiftOutOfRange : Error {
  using Error::Error;
};

struct IncompatibleWords : Error {
  using Error::Error;
};

struct NotAProperSimple : Error {
  using Error::Error;
};

struct InvalidPresentation : Error {
  using Error::Error;
};

struct EnumerationOverflow : Error {
  using Error::Error;
};

struct NotRegularTable : Error {
  using Error::Error;
};

struct TooLargeForIsomorphism : Error {
  using Error::Error;
};

struct NotEliminableHere : Error {
  using Error::Error;
};

struct EmptyStratum : Error {
  using Error::Error;
};

struct TooFewSamples : Error {
  using Error::Error;
};

struct DegenerateProjection : Error {
  using Error::Error;
};

struct UndersampledCrossing : Error {
  using Error::Error;
};

struct InvalidRange : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace braidforge
