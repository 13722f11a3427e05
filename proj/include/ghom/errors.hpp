#pragma once

#include <stdexcept>
#include <string>

namespace ghom {

// Base for every error the library raises on bad input or exhausted limits.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct EnumerationBudgetExceeded : Error {
  using Error::Error;
};

struct NotACycle : Error {
  using Error::Error;
};

struct NotInCycleSpace : Error {
  using Error::Error;
};

struct NotHamiltonian : Error {
  using Error::Error;
};

// Raised when an image lattice is not contained in the kernel lattice; this
// means the chain complex is broken upstream.
struct ImageNotContained : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

}  // namespace ghom
