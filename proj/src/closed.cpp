#include "semiwkb/closed.hpp"

#include <cmath>

namespace semiwkb {

namespace {

double vector_denominator(const QuantumNumbers& qn, double alpha) {
  if (alpha > qn.l() + 0.5) {
    throw Error(ErrorKind::Supercritical, "supercritical coupling: alpha > l + 1/2");
  }
  return qn.n_r() + 0.5 + coulomb_aux(qn.l(), alpha).lambda_vector;
}

double scalar_denominator(const QuantumNumbers& qn, double alpha) {
  return qn.n_r() + 0.5 + coulomb_aux(qn.l(), alpha).lambda_scalar;
}

void require_coupling(double m, double alpha) {
  if (!(m >= 0.0) || !(alpha >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "mass and alpha must be >= 0");
  }
}

}  // namespace

double coulomb_vector_energy(const QuantumNumbers& qn, double m, double alpha) {
  require_coupling(m, alpha);
  const double x = alpha / vector_denominator(qn, alpha);
  return m / std::sqrt(1.0 + x * x);
}

double coulomb_vector_binding(const QuantumNumbers& qn, double m, double alpha) {
  require_coupling(m, alpha);
  const double x = alpha / vector_denominator(qn, alpha);
  const double root = std::sqrt(1.0 + x * x);
  // m (1/root - 1) = -m x^2 / (root (1 + root))
  return -m * x * x / (root * (1.0 + root));
}

double coulomb_scalar_energy(const QuantumNumbers& qn, double m, double alpha) {
  require_coupling(m, alpha);
  const double x = alpha / scalar_denominator(qn, alpha);
  return m * std::sqrt((1.0 - x) * (1.0 + x));
}

double coulomb_scalar_binding(const QuantumNumbers& qn, double m, double alpha) {
  require_coupling(m, alpha);
  const double x = alpha / scalar_denominator(qn, alpha);
  return -m * x * x / (1.0 + std::sqrt((1.0 - x) * (1.0 + x)));
}

double coulomb_scalar_momentum(const QuantumNumbers& qn, double m, double alpha) {
  require_coupling(m, alpha);
  return alpha * m / scalar_denominator(qn, alpha);
}

double fine_structure_sc(const QuantumNumbers& qn, double m, double alpha) {
  const double n = qn.principal();
  const double a2 = alpha * alpha;
  return m * a2 * a2 / (2.0 * n * n * n) * (1.0 / (qn.l() + 0.5) - 1.0 / (4.0 * n));
}

double linear_scalar_energy_sq(const QuantumNumbers& qn, double kappa) {
  if (!(kappa > 0.0)) throw Error(ErrorKind::InvalidArgument, "kappa must be > 0");
  return 8.0 * kappa * (2.0 * qn.n_r() + qn.l() + 1.5);
}

double funnel_energy_sq(const QuantumNumbers& qn, double kappa, double alpha_s) {
  if (!(kappa > 0.0)) throw Error(ErrorKind::InvalidArgument, "kappa must be > 0");
  if (!(alpha_s >= 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha_s must be >= 0");
  const double e_sq = 8.0 * kappa * (2.0 * qn.n_r() + qn.l() - alpha_s + 1.5);
  if (!(e_sq > 0.0)) {
    throw Error(ErrorKind::Unphysical, "funnel E^2 <= 0: alpha_s too large for these numbers");
  }
  return e_sq;
}

double mass_shift(double e_sq, double c_sq) {
  const double m_sq = e_sq - c_sq;
  if (m_sq < 0.0) throw Error(ErrorKind::Unphysical, "negative M^2 after mass shift");
  return m_sq;
}

double schrodinger_coulomb_energy(const QuantumNumbers& qn, double m, double alpha) {
  const double n = qn.principal();
  return -m * alpha * alpha / (2.0 * n * n);
}

EigenvalueResult closed_form_eigenvalue(const QuantumNumbers& qn, const PotentialSpec& spec) {
  if (!spec.normalizable()) {
    throw Error(ErrorKind::NonNormalizable,
                "non-normalizable (vector confinement): " + spec.describe());
  }
  // Two-body specs quantize E/2; the single-particle formulas give E_k.
  const double per_particle = spec.two_body() ? 2.0 : 1.0;
  EigenvalueResult out;
  out.method = Method::ClosedForm;
  out.qn = qn;
  switch (spec.family()) {
    case Family::Coulomb:
      if (spec.alpha() == 0.0 || spec.mass() == 0.0) {
        throw Error(ErrorKind::NoBoundState, "no bound state (free limit)");
      }
      out.energy = per_particle * (spec.coupling() == Coupling::Vector
                                       ? coulomb_vector_energy(qn, spec.mass(), spec.alpha())
                                       : coulomb_scalar_energy(qn, spec.mass(), spec.alpha()));
      break;
    case Family::Linear: {
      // The two-body formula carries E^2/4 in p^2; one body has E^2.
      const double scale = spec.two_body() ? 1.0 : 0.25;
      out.energy = std::sqrt(scale * linear_scalar_energy_sq(qn, spec.kappa()));
      break;
    }
    case Family::Funnel: {
      const double scale = spec.two_body() ? 1.0 : 0.25;
      out.energy = std::sqrt(scale * funnel_energy_sq(qn, spec.kappa(), spec.alpha()));
      break;
    }
  }
  return out;
}

HydrogenCalibration HydrogenCalibration::from_rydberg(double rydberg, double inv_alpha) {
  if (!(rydberg > 0.0) || !(inv_alpha > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "calibration constants must be > 0");
  }
  const double alpha = 1.0 / inv_alpha;
  return {2.0 * rydberg / (alpha * alpha), alpha};
}

const std::vector<QuantumNumbers>& hydrogen_table_states() {
  static const std::vector<QuantumNumbers> states = {
      {0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {2, 4}, {3, 4},
  };
  return states;
}

const std::vector<std::array<double, 3>>& hydrogen_table_reference() {
  // {E_NR, E_KG, E_SC} in eV.
  static const std::vector<std::array<double, 3>> ref = {
      {-13.6155700, -13.6164800, -13.6143000},
      {-3.4038930, -3.4039190, -3.4038440},
      {-3.4038930, -3.4040400, -3.4037230},
      {-1.5128410, -1.5128520, -1.5128250},
      {-0.8509732, -0.8509756, -0.8509693},
      {-0.5446228, -0.5446243, -0.5446208},
      {-0.3782103, -0.3782109, -0.3782095},
      {-0.2778688, -0.2778690, -0.2778684},
      {-0.2127433, -0.2127435, -0.2127430},
  };
  return ref;
}

std::vector<SpectrumRow> table1(double m, double alpha) {
  std::vector<SpectrumRow> rows;
  for (const auto& qn : hydrogen_table_states()) {
    rows.push_back({qn, schrodinger_coulomb_energy(qn, m, alpha),
                    coulomb_vector_binding(qn, m, alpha), coulomb_scalar_binding(qn, m, alpha)});
  }
  return rows;
}

}  // namespace semiwkb
