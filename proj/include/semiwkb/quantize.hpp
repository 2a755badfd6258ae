#pragma once

#include <optional>

#include "semiwkb/model.hpp"
#include "semiwkb/phase.hpp"

namespace semiwkb {

enum class Method { ClosedForm, NumericWkb, OdeOracle };

const char* to_string(Method m) noexcept;

struct EigenvalueResult {
  double energy = 0.0;
  Method method = Method::NumericWkb;
  /// |action(E) - pi (n_r + 1/2)| for WKB, final bracket width for the ODE
  /// oracle, 0 for closed forms.
  double residual = 0.0;
  TurningPoints turning_points;
  QuantumNumbers qn{0, 0};
  /// Interior sign changes of the converged ODE solution (oracle only).
  std::optional<int> node_count;
};

struct QuantizeOptions {
  double residual_tolerance = 1e-10;
  int max_iterations = 300;
};

/// pi (n_r + 1/2): the real-axis target of the two-turning-point condition.
double quantization_target(int n_r);

/// Solves action(E) = pi (n_r + 1/2) for E. The action is monotone in E, so
/// a geometric grid between the spectrum floor and ceiling gives one bracket
/// that TOMS 748 then refines. For scalar confining potentials the physical
/// cut alone carries the condition.
EigenvalueResult solve_radial_eigenvalue(const QuantumNumbers& qn, const PotentialSpec& spec,
                                         const QuantizeOptions& opt = {});

/// M^2 = (l+1/2)^2, M_z = m, n_theta = l - m.
AngularEigenvalue angular_eigenvalues(int l, int m_int);

/// Solves angular_phase_integral(M, m_z) = pi (n_theta + 1/2) for M.
double invert_angular_quantization(int n_theta, int m_z);

}  // namespace semiwkb
