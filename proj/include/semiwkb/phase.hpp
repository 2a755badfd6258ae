#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semiwkb/model.hpp"
#include "semiwkb/quadrature.hpp"

namespace semiwkb {

/// Real roots of p^2(r) = 0.
struct TurningPoints {
  std::vector<double> physical;     // r > 0, ascending (inner, outer)
  std::vector<double> nonphysical;  // r < 0, ascending; scalar confining only

  double inner() const { return physical.at(0); }
  double outer() const { return physical.at(1); }
};

struct PhaseIntegralReport {
  double value = 0.0;
  double error_estimate = 0.0;
  TurningPoints turning_points;
  /// (2 I-, 2 I+): twice the real-axis action over the r < 0 and r > 0 cuts.
  std::optional<std::pair<double, double>> cut_contributions;
  /// (I_0, I_inf): residues at the origin and at infinity.
  std::optional<std::pair<double, double>> residue_parts;
  /// |2 I- + 2 I+ - (I_0 + I_inf)| when both decompositions are available.
  std::optional<double> discrepancy;
};

/// Turning points of p^2 at energy E. Coulomb and m = 0 linear use closed
/// quadratics; the remaining cases scan a log grid and refine sign changes.
/// Throws NoBoundRegion, Supercritical, NonNormalizable.
TurningPoints find_turning_points(double energy, const PotentialSpec& spec,
                                  const QuantumNumbers& qn);

/// Action between the physical turning points, integral of sqrt(p^2) dr.
PhaseIntegralReport radial_phase_integral(double energy, const PotentialSpec& spec,
                                          const QuantumNumbers& qn,
                                          const QuadratureOptions& opt = {});

/// Radial action, or 0 when no classically allowed region exists at E.
/// Monotone in E; this is the function the quantizer brackets.
double radial_action(double energy, const PotentialSpec& spec, const QuantumNumbers& qn);

/// Both evaluations of the closed contour around the two cuts of the scalar
/// linear problem: residues at 0 and infinity, and real-axis cut integrals.
/// Throws InvalidArgument unless spec is scalar linear.
PhaseIntegralReport contour_phase_linear(double energy, const PotentialSpec& spec,
                                         const QuantumNumbers& qn,
                                         const QuadratureOptions& opt = {});

/// Integral of sqrt(M^2 - M_z^2 / sin^2 theta) between its turning points.
/// Requires M > M_z >= 0.
double angular_phase_integral(double m_total, double m_z);

}  // namespace semiwkb
