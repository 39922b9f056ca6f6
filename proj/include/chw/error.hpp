#pragma once

#include <stdexcept>
#include <string>

namespace chw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct GenusMismatch : Error {
  using Error::Error;
};

struct SpaceMismatch : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct UnsupportedGenus : Error {
  using Error::Error;
};

}  // namespace chw
