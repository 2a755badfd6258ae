#pragma once

// Physical problem definition: potentials, couplings, quantum numbers.
//
// Natural units (hbar = c = 1) throughout. Every quantity is scale-covariant,
// so callers may feed eV, GeV or dimensionless numbers as long as they are
// consistent.

#include <cmath>
#include <string>

#include "semiwkb/error.hpp"

namespace semiwkb {

enum class Family { Coulomb, Linear, Funnel };
enum class Coupling { Vector, Scalar };

const char* to_string(Family f) noexcept;
const char* to_string(Coupling c) noexcept;

/// Immutable description of a spherically symmetric potential and how it
/// couples to the particle. Build through the named constructors; they
/// validate the parameter set for the family.
class PotentialSpec {
 public:
  static PotentialSpec coulomb(Coupling coupling, double mass, double alpha,
                               bool two_body = false);
  static PotentialSpec linear(Coupling coupling, double mass, double kappa,
                              bool two_body = false);
  static PotentialSpec funnel(Coupling coupling, double mass, double alpha_s,
                              double kappa, bool two_body = false);

  Family family() const noexcept { return family_; }
  Coupling coupling() const noexcept { return coupling_; }
  double mass() const noexcept { return mass_; }
  /// Coulomb strength (alpha, or alpha_s for the funnel).
  double alpha() const noexcept { return alpha_; }
  double kappa() const noexcept { return kappa_; }
  bool two_body() const noexcept { return two_body_; }

  bool confining() const noexcept { return family_ != Family::Coulomb; }
  /// Vector-like confinement has no normalizable solutions; such specs can be
  /// built but every solver refuses them.
  bool normalizable() const noexcept {
    return !(confining() && coupling_ == Coupling::Vector);
  }
  /// Kinetic energy entering p^2: E/2 per particle for the equal-mass
  /// two-body system, E otherwise.
  double kinetic_energy(double energy) const noexcept {
    return two_body_ ? 0.5 * energy : energy;
  }

  std::string describe() const;

 private:
  PotentialSpec(Family f, Coupling c, double mass, double alpha, double kappa, bool two_body);

  Family family_;
  Coupling coupling_;
  double mass_;
  double alpha_;
  double kappa_;
  bool two_body_;
};

/// (n_r, l, m) with 0 <= m <= l. The principal number is n_r + l + 1.
class QuantumNumbers {
 public:
  QuantumNumbers(int n_r, int l, int m_int = 0);

  int n_r() const noexcept { return n_r_; }
  int l() const noexcept { return l_; }
  int m_int() const noexcept { return m_int_; }
  int principal() const noexcept { return n_r_ + l_ + 1; }
  int n_theta() const noexcept { return l_ - m_int_; }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

 private:
  int n_r_;
  int l_;
  int m_int_;
};

/// Squared angular momentum M^2 = (l + 1/2)^2 and its companions.
struct AngularEigenvalue {
  double m_squared;
  int m_z;
  int n_theta;
};

/// Effective centrifugal indices for the Coulomb problem.
struct CoulombAux {
  double lambda_vector;  // sqrt((l+1/2)^2 - alpha^2); NaN when supercritical
  double lambda_scalar;  // sqrt((l+1/2)^2 + alpha^2)
};

inline double centrifugal_coefficient(int l) noexcept {
  const double h = l + 0.5;
  return h * h;
}

CoulombAux coulomb_aux(int l, double alpha);

/// True when a vector-coupled Coulomb-type spec has alpha > l + 1/2.
bool supercritical(const PotentialSpec& spec, int l) noexcept;

/// V(r). Throws Domain for r <= 0.
double potential_value(double r, const PotentialSpec& spec);

/// Effective mass W(r) = m + V(r) of the scalar coupling.
double effective_mass(double r, const PotentialSpec& spec);

/// p^2(r) of the separated radial equation with centrifugal term
/// (l+1/2)^2/r^2:
///   vector:  (E_k - V)^2 - m^2 - (l+1/2)^2/r^2
///   scalar:  E_k^2 - W^2      - (l+1/2)^2/r^2
/// with E_k = E/2 for two-body specs. Throws Domain for r <= 0.
double effective_p_squared(double r, double energy, const PotentialSpec& spec,
                           const QuantumNumbers& qn);

/// Same as effective_p_squared but accepts any r != 0; used by the contour
/// machinery to walk the non-physical half-axis.
double effective_p_squared_signed(double r, double energy, const PotentialSpec& spec, int l);

}  // namespace semiwkb
