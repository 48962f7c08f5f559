#pragma once

#include <stdexcept>

namespace harmocass {

/// Base class of every error this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter violates a documented precondition.
struct InvalidParams : Error {
  using Error::Error;
};

/// An output file could not be created or written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace harmocass
