#pragma once

#include <stdexcept>
#include <string>

namespace orebasis {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

struct NotRegular : Error {
  using Error::Error;
};

struct NotIrreducible : Error {
  using Error::Error;
};

struct Inconsistent : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

struct NonIntegerSlope : Error {
  using Error::Error;
};

struct RankDeficient : Error {
  using Error::Error;
};

struct HypothesisViolated : Error {
  using Error::Error;
};

struct NoRow : Error {
  using Error::Error;
};

struct NotSecondOrderRegular : Error {
  using Error::Error;
};

}  // namespace orebasis
