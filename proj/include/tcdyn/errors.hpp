#pragma once

#include <stdexcept>
#include <string>

namespace tcdyn {

// Base of every error raised by the library. The CLI maps these to exit code 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// Fock basis cannot hold the requested state to the required norm.
struct TruncationTooSmall : Error {
  using Error::Error;
};

// An approximation was asked to run outside the regime it is built for.
struct GuardViolation : Error {
  using Error::Error;
};

struct BasisMismatch : Error {
  using Error::Error;
};

struct NotXShaped : Error {
  using Error::Error;
};

struct NotPositiveSemidefinite : Error {
  using Error::Error;
};

struct GridTooCoarse : Error {
  using Error::Error;
};

}  // namespace tcdyn
