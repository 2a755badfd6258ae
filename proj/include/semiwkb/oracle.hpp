#pragma once

// Independent eigenvalue oracle: Numerov shooting on the exact radial
// Klein-Gordon and Schrodinger equations with the l(l+1) centrifugal term.
// No WKB machinery is involved.

#include "semiwkb/model.hpp"
#include "semiwkb/quantize.hpp"

namespace semiwkb {

enum class GridSpacing { Uniform, Logarithmic };

struct RadialGrid {
  double r_min;
  double r_max;
  int points;
  GridSpacing spacing = GridSpacing::Logarithmic;

  /// r_min = 1e-6/(m alpha), r_max = 50 n^2/(m alpha), 20000 log points.
  static RadialGrid default_for(const QuantumNumbers& qn, double m, double alpha);
  void validate() const;
};

/// -u'' + [l(l+1)/r^2 - 2 alpha E/r + m^2 - E^2 - alpha^2/r^2] u = 0.
EigenvalueResult ode_eigenvalue_kg(const QuantumNumbers& qn, double m, double alpha,
                                   const RadialGrid& grid);
EigenvalueResult ode_eigenvalue_kg(const QuantumNumbers& qn, double m, double alpha);

/// -u''/(2m) + [l(l+1)/(2m r^2) - alpha/r] u = E' u; returns the binding E'.
EigenvalueResult ode_eigenvalue_nr(const QuantumNumbers& qn, double m, double alpha,
                                   const RadialGrid& grid);
EigenvalueResult ode_eigenvalue_nr(const QuantumNumbers& qn, double m, double alpha);

}  // namespace semiwkb
