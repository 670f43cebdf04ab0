#pragma once

#include <stdexcept>
#include <string>

namespace dgk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct DuplicateEdge : ParseError {
  using ParseError::ParseError;
};
struct BadWeight : ParseError {
  using ParseError::ParseError;
};
struct DanglingVertex : Error {
  using Error::Error;
};
struct WeaklyDisconnected : Error {
  using Error::Error;
};
struct NotStronglyConnected : Error {
  using Error::Error;
};
struct SingularSystem : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct ZeroDegree : Error {
  using Error::Error;
};
struct BadAlpha : Error {
  using Error::Error;
};
struct MaxIterExceeded : Error {
  using Error::Error;
};
struct ToleranceUnreachable : Error {
  using Error::Error;
};

}  // namespace dgk
