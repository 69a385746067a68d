#pragma once

#include <stdexcept>
#include <string>

namespace repkit {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mixing scalars or matrices over different fields.
struct FieldMismatch : Error {
  using Error::Error;
};

/// nilpotent_jordan called on a non-nilpotent matrix.
struct NotNilpotent : Error {
  using Error::Error;
};

/// Path enumeration requested on a cyclic quiver.
struct PathExplosion : Error {
  using Error::Error;
};

/// Malformed input data (quivers, representations, JSON).
struct ValidationError : Error {
  using Error::Error;
};

/// A morphism matrix does not commute with the module actions.
struct IntertwinerViolation : Error {
  using Error::Error;
};

/// An operation was requested that the category instance does not support.
struct CapabilityMissing : Error {
  using Error::Error;
};

/// A filtration was requested for a representation outside Phi.
struct NotInPhi : Error {
  using Error::Error;
};

/// A flat right resolution was requested for an object that is not wGFlat.
struct NotWGFlat : Error {
  using Error::Error;
};

/// A broken internal invariant; indicates a bug, mapped to exit code 3.
struct InternalError : Error {
  using Error::Error;
};

inline void internal_check(bool cond, const std::string& what) {
  if (!cond) throw InternalError("internal invariant violated: " + what);
}

}  // namespace repkit
