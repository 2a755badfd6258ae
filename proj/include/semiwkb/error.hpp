#pragma once

#include <stdexcept>
#include <string>

namespace semiwkb {

enum class ErrorKind {
  InvalidArgument,  // malformed inputs, bad quantum numbers, wrong family
  Domain,           // r <= 0 and similar
  Supercritical,    // vector Coulomb with alpha > l + 1/2
  NonNormalizable,  // vector-like confinement
  NoBoundRegion,    // p^2 <= 0 everywhere at this energy
  NoBoundState,     // quantization target not reachable
  NotEigenvalue,    // energy fails the quantization condition
  NotConverged,     // quadrature / root finding / shooting budget exhausted
  Unphysical,       // negative E^2 or M^2
  DegenerateFit,    // rank-deficient Regge design
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace semiwkb
