#pragma once

#include <stdexcept>
#include <string>

namespace cmcstab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSpace : Error {
  using Error::Error;
};
struct PointOutsideChart : Error {
  using Error::Error;
};
struct MismatchedBasePoints : Error {
  using Error::Error;
};
struct NotUnitVector : Error {
  using Error::Error;
};
struct NoKillingField : Error {
  using Error::Error;
};

struct DegenerateImmersion : Error {
  using Error::Error;
};
struct ChartGuardViolation : Error {
  using Error::Error;
};
struct UnsupportedSpace : Error {
  using Error::Error;
};
struct NonClosedMesh : Error {
  using Error::Error;
};

struct DisconnectedMesh : Error {
  using Error::Error;
};
struct NegativeMassEntry : Error {
  using Error::Error;
};
struct SolverNoConvergence : Error {
  using Error::Error;
};
struct IndefiniteFirstEigenfunction : Error {
  using Error::Error;
};
struct ZeroFunction : Error {
  using Error::Error;
};
struct NonPositiveEigenfunction : Error {
  using Error::Error;
};
struct NonConstantH : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace cmcstab
