#pragma once

#include <stdexcept>
#include <string>

namespace classpower {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Group enumeration grew past the configured element cap.
struct CapExceeded : Error {
  using Error::Error;
};

/// Generators of inconsistent degree were supplied.
struct DegreeMismatch : Error {
  using Error::Error;
};

/// A quotient was requested by a subgroup that is not normal.
struct NotNormal : Error {
  using Error::Error;
};

/// Input file or document could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

/// A character table failed one of its structural invariants.
/// The message names the first violated invariant.
struct ValidationFailed : Error {
  using Error::Error;
};

/// Random class-matrix combinations kept producing repeated eigenvalues.
struct DegenerateSpectrum : Error {
  using Error::Error;
};

/// A class-power lookup needed a prime power map the table does not carry.
struct MissingPowerMap : Error {
  explicit MissingPowerMap(unsigned long prime)
      : Error("missing power map for prime " + std::to_string(prime)), prime(prime) {}
  unsigned long prime;
};

/// A quantity that must be a nonnegative integer came out non-integral.
struct NonIntegral : Error {
  using Error::Error;
};

/// Invariant that cannot fail for valid inputs failed anyway (library bug guard).
struct InternalError : Error {
  using Error::Error;
};

}  // namespace classpower
