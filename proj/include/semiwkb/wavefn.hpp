#pragma once

// Leading-order WKB radial eigenfunctions.
//
// Inside [r_in, r_out]:  A / sqrt|p| cos(Phi(r) - pi/4),  Phi = int_{r_in}^r p dr
// Outside: A / (2 sqrt|p|) exp(-int |p| dr) measured from the nearest turning
// point, with sign (-1)^{n_r} beyond r_out so the tail continues the last lobe.
// |p| is floored at 1e-12 of the mean momentum to keep turning points finite.

#include <vector>

#include "semiwkb/model.hpp"
#include "semiwkb/phase.hpp"
#include "semiwkb/quantize.hpp"

namespace semiwkb {

class WkbWavefunction {
 public:
  /// Refuses (NotEigenvalue) when |action(E) - pi (n_r + 1/2)| > tolerance.
  WkbWavefunction(const PotentialSpec& spec, const QuantumNumbers& qn, double energy,
                  double tolerance = 1e-8);

  const PotentialSpec& spec() const noexcept { return spec_; }
  const QuantumNumbers& qn() const noexcept { return qn_; }
  double energy() const noexcept { return energy_; }
  double r_in() const noexcept { return r_in_; }
  double r_out() const noexcept { return r_out_; }
  double total_phase() const noexcept { return total_phase_; }
  /// Constant momentum of the standing-wave form: sqrt(m^2 - E_k^2) for
  /// Coulomb (equal to |p_n| in the scalar case), mean momentum otherwise.
  double standing_momentum() const noexcept { return standing_momentum_; }
  /// Standing-wave phase offset at the inner turning point, |p_n| r_in.
  double chi1() const noexcept { return chi1_; }
  double normalization() const noexcept { return normalization_; }

  /// Phase Phi(r) accumulated from r_in; r must lie in [r_in, r_out].
  double phase(double r) const;
  /// sqrt(p^2(r)) inside the allowed region, the local wavenumber.
  double local_wavenumber(double r) const;
  /// ln|R~(r)| and its sign, usable where R~ underflows.
  double log_abs(double r, int* sign) const;

 private:
  double raw(double r) const;
  double momentum(double r) const;

  PotentialSpec spec_;
  QuantumNumbers qn_;
  double energy_;
  double r_in_;
  double r_out_;
  double total_phase_;
  double standing_momentum_;
  double chi1_;
  double momentum_floor_;
  // Cosine series of dphase/dt with r = r_in + (r_out - r_in) sin^2(t/2).
  std::vector<double> phase_series_;
  double normalization_ = 1.0;
};

/// R~(r) (the radial function before division by r).
double wkb_radial_wavefunction(double r, const WkbWavefunction& wf);

/// R(r) = R~(r) / r.
double radial_wavefunction(double r, const WkbWavefunction& wf);

/// C cos(|p_n| r - chi_1 - pi/4) with C = normalization.
double standing_wave(double r, const WkbWavefunction& wf);

/// Sign changes of R~ on a fine grid over (0, 2 r_out].
int count_nodes(const WkbWavefunction& wf, int samples = 8000);

/// Slope of ln R against ln r over [1e-6, 1e-4] r_in; Coulomb only.
double small_r_exponent(const WkbWavefunction& wf);

}  // namespace semiwkb
