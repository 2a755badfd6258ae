#include "semiwkb/quantize.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

namespace semiwkb {

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::ClosedForm: return "closed";
    case Method::NumericWkb: return "wkb";
    case Method::OdeOracle: return "ode";
  }
  return "?";
}

double quantization_target(int n_r) { return std::numbers::pi * (n_r + 0.5); }

namespace {

// Trial energies, ascending, covering (floor, ceiling) of the spectrum.
std::vector<double> energy_grid(const QuantumNumbers& qn, const PotentialSpec& spec,
                                double ceiling_boost) {
  std::vector<double> grid;
  const double per_particle = spec.two_body() ? 2.0 : 1.0;
  if (spec.family() == Family::Coulomb) {
    // Bound states live in 0 < E_k < m; approach the edge geometrically.
    const double edge = per_particle * spec.mass();
    for (int p = -9; p <= -1; ++p) grid.push_back(edge * std::pow(10.0, p));
    for (int k = 1; k <= 60; ++k) grid.push_back(edge - edge * std::ldexp(1.0, -k));
    return grid;
  }
  const double oscillator =
      std::sqrt(8.0 * spec.kappa() * (2.0 * qn.n_r() + qn.l() + 1.5)) / (spec.two_body() ? 1.0 : 2.0);
  const double e_max = ceiling_boost * (10.0 * oscillator + per_particle * spec.mass());
  for (double e = e_max * 1e-9; e < e_max; e *= 2.0) grid.push_back(e);
  grid.push_back(e_max);
  return grid;
}

}  // namespace

EigenvalueResult solve_radial_eigenvalue(const QuantumNumbers& qn, const PotentialSpec& spec,
                                         const QuantizeOptions& opt) {
  if (!spec.normalizable()) {
    throw Error(ErrorKind::NonNormalizable,
                "non-normalizable (vector confinement): " + spec.describe());
  }
  if (supercritical(spec, qn.l())) {
    throw Error(ErrorKind::Supercritical, "supercritical coupling: alpha > l + 1/2");
  }
  if (spec.family() == Family::Coulomb && (spec.alpha() == 0.0 || spec.mass() == 0.0)) {
    throw Error(ErrorKind::NoBoundState, "no bound state with these quantum numbers (free limit)");
  }

  const double target = quantization_target(qn.n_r());
  auto g = [&](double e) { return radial_action(e, spec, qn) - target; };

  double lo = 0.0;
  double hi = 0.0;
  bool found = false;
  const int boosts = spec.confining() ? 6 : 1;
  for (int b = 0; b < boosts && !found; ++b) {
    double prev = 0.0;
    for (double e : energy_grid(qn, spec, std::ldexp(1.0, 2 * b))) {
      if (g(e) >= 0.0) {
        lo = prev;
        hi = e;
        found = true;
        break;
      }
      prev = e;
    }
  }
  if (!found) {
    throw Error(ErrorKind::NoBoundState, "no bound state with these quantum numbers");
  }

  double e = hi;
  if (lo > 0.0) {
    std::uintmax_t iters = static_cast<std::uintmax_t>(opt.max_iterations);
    auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 3);
    const auto [a, b] = boost::math::tools::toms748_solve(g, lo, hi, tol, iters);
    const double ga = std::abs(g(a));
    const double gb = std::abs(g(b));
    e = ga <= gb ? a : b;
    const double width = b - a;
    EigenvalueResult out;
    out.energy = e;
    out.method = Method::NumericWkb;
    out.residual = std::min(ga, gb);
    out.qn = qn;
    // Near a continuum edge the action is so steep that adjacent doubles
    // straddle the tolerance; a collapsed bracket is then the best answer.
    const bool collapsed = width <= 16.0 * std::numeric_limits<double>::epsilon() * std::abs(e);
    if (out.residual > opt.residual_tolerance && !collapsed) {
      throw Error(ErrorKind::NotConverged,
                  "quantizer residual " + std::to_string(out.residual) + " above tolerance");
    }
    out.turning_points = find_turning_points(e, spec, qn);
    return out;
  }
  throw Error(ErrorKind::NotConverged, "quantizer: bracket starts at the first grid point");
}

AngularEigenvalue angular_eigenvalues(int l, int m_int) {
  if (l < 0 || m_int < 0 || m_int > l) {
    throw Error(ErrorKind::InvalidArgument, "angular_eigenvalues requires 0 <= m <= l");
  }
  const int n_theta = l - m_int;
  // sqrt(M^2) = M_z + n_theta + 1/2
  const double m_abs = m_int + n_theta + 0.5;
  return {m_abs * m_abs, m_int, n_theta};
}

double invert_angular_quantization(int n_theta, int m_z) {
  if (n_theta < 0 || m_z < 0) {
    throw Error(ErrorKind::InvalidArgument, "invert_angular_quantization: negative index");
  }
  const double target = quantization_target(n_theta);
  auto g = [&](double m) { return angular_phase_integral(m, m_z) - target; };
  // The phase is pi (M - M_z), so M_z + 1/4 is always below the root.
  const double lo = m_z + 0.25;
  double hi = m_z + 1.0;
  while (g(hi) < 0.0) hi += 1.0;
  std::uintmax_t iters = 200;
  auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 3);
  const auto [a, b] = boost::math::tools::toms748_solve(g, lo, hi, tol, iters);
  return 0.5 * (a + b);
}

}  // namespace semiwkb
