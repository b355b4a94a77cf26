#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad dimension, index out of
/// range, zero vector, K-positive input, ...).  The CLI maps it to exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace cremona
