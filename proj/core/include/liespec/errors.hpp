#pragma once

#include <stdexcept>

namespace liespec {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rank outside the validity window of a classical family.
struct InvalidRank : Error {
  using Error::Error;
};

/// Family without tabulated spectral data (E6, E7, unknown labels).
struct UnsupportedFamily : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// A search box or counting request exceeds the configured budget.
/// Signals the caller to lower R_max (or raise the budget), not a bug.
struct ResourceLimit : Error {
  using Error::Error;
};

/// Divisor-formula backend invoked for s outside {2, 4}.
struct UnsupportedS : Error {
  using Error::Error;
};

struct InvalidExponent : Error {
  using Error::Error;
};

/// Exponent profiles are defined for rank >= 2 only.
struct UnsupportedRank : Error {
  using Error::Error;
};

/// Corrupted internal data, e.g. a non-integral Weyl dimension product.
struct InternalInconsistency : Error {
  using Error::Error;
};

struct NyquistViolation : Error {
  using Error::Error;
};

struct ZeroDenominator : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

}  // namespace liespec
