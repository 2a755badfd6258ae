#pragma once

// Closed-form spectra: Klein-Gordon-equivalent vector Coulomb, scalar
// Coulomb, scalar linear (contour result) and funnel, plus the Schrodinger
// baseline used for hydrogen comparisons.

#include <array>
#include <vector>

#include "semiwkb/model.hpp"
#include "semiwkb/quantize.hpp"

namespace semiwkb {

/// E = m / sqrt(1 + alpha^2 / (n_r + 1/2 + Lambda)^2), Lambda^2 = (l+1/2)^2 - alpha^2.
double coulomb_vector_energy(const QuantumNumbers& qn, double m, double alpha);
/// E - m of the above, evaluated without cancellation.
double coulomb_vector_binding(const QuantumNumbers& qn, double m, double alpha);

/// E = m sqrt(1 - alpha^2 / (n_r + 1/2 + sqrt((l+1/2)^2 + alpha^2))^2).
double coulomb_scalar_energy(const QuantumNumbers& qn, double m, double alpha);
double coulomb_scalar_binding(const QuantumNumbers& qn, double m, double alpha);

/// |p_n| = alpha m / (n_r + 1/2 + sqrt((l+1/2)^2 + alpha^2)); p_n itself is
/// imaginary, so E^2 = m^2 - |p_n|^2.
double coulomb_scalar_momentum(const QuantumNumbers& qn, double m, double alpha);

/// Leading relativistic correction of the scalar Coulomb levels:
/// (m alpha^4 / 2 n^3) (1/(l+1/2) - 1/(4n)).
double fine_structure_sc(const QuantumNumbers& qn, double m, double alpha);

/// E^2 = 8 kappa (2 n_r + l + 3/2), two-body scalar linear; m drops out.
double linear_scalar_energy_sq(const QuantumNumbers& qn, double kappa);

/// E^2 = 8 kappa (2 n_r + l - alpha_s + 3/2), first order in alpha_s.
/// Throws Unphysical when the result is <= 0.
double funnel_energy_sq(const QuantumNumbers& qn, double kappa, double alpha_s);

/// M^2 = E^2 - C^2. Throws Unphysical for negative M^2.
double mass_shift(double e_sq, double c_sq);

/// C^2 = 8 kappa alpha_s, the shift that turns the linear spectrum into the
/// funnel one: funnel_energy_sq = linear_scalar_energy_sq - C^2.
inline double funnel_shift(double kappa, double alpha_s) { return 8.0 * kappa * alpha_s; }

/// Non-relativistic binding -m alpha^2 / (2 n^2).
double schrodinger_coulomb_energy(const QuantumNumbers& qn, double m, double alpha);

/// Closed-form eigenvalue for any solvable spec (absolute E, not binding).
/// Scalar linear/funnel use the contour spectra, which ignore m.
EigenvalueResult closed_form_eigenvalue(const QuantumNumbers& qn, const PotentialSpec& spec);

struct SpectrumRow {
  QuantumNumbers qn;
  double e_nr;  // Schrodinger binding
  double e_kg;  // vector Coulomb binding
  double e_sc;  // scalar Coulomb binding
};

/// Hydrogen constants from a Rydberg-style calibration m alpha^2 / 2.
struct HydrogenCalibration {
  double mass;   // in the unit of rydberg
  double alpha;
  static HydrogenCalibration from_rydberg(double rydberg, double inv_alpha);
};

/// (l, n_r) pairs of the published hydrogen comparison, in print order.
const std::vector<QuantumNumbers>& hydrogen_table_states();

/// Published bindings in eV for hydrogen_table_states(), same order.
const std::vector<std::array<double, 3>>& hydrogen_table_reference();

/// Three binding columns for every hydrogen_table_states() entry.
std::vector<SpectrumRow> table1(double m, double alpha);

}  // namespace semiwkb
