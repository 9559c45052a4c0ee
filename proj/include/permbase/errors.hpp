#pragma once

#include <stdexcept>
#include <string>

namespace permbase {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (non-prime p, b outside [0, a(p-1)], ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A configured resource cap (element count, degree, search nodes) was hit.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A computed value disagrees with the value it was checked against.
class VerificationFailure : public Error {
public:
  using Error::Error;
};

} // namespace permbase
