#include "semiwkb/phase.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numbers>

namespace semiwkb {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void no_region(const char* why) {
  throw Error(ErrorKind::NoBoundRegion, std::string("no bound region at this E: ") + why);
}

void check_solvable(const PotentialSpec& spec, int l) {
  if (!spec.normalizable()) {
    throw Error(ErrorKind::NonNormalizable,
                "non-normalizable (vector confinement): " + spec.describe());
  }
  if (supercritical(spec, l)) {
    throw Error(ErrorKind::Supercritical, "supercritical coupling: alpha > l + 1/2");
  }
}

// p^2 = A + B/r - C/r^2 (all Coulomb cases).
TurningPoints coulomb_turning_points(double energy, const PotentialSpec& spec, int l) {
  const double ek = spec.kinetic_energy(energy);
  const double m = spec.mass();
  const double alpha = spec.alpha();
  const double a = (ek - m) * (ek + m);
  const bool vector = spec.coupling() == Coupling::Vector;
  const double b = vector ? 2.0 * alpha * ek : 2.0 * m * alpha;
  const double h = l + 0.5;
  const double c = vector ? (h - alpha) * (h + alpha) : centrifugal_coefficient(l) + alpha * alpha;
  const double a_neg = -a;
  if (!(a_neg > 0.0)) no_region("energy at or above the continuum threshold");
  if (!(b > 0.0)) no_region("no attractive 1/r term");
  double disc = b * b - 4.0 * a_neg * c;
  if (disc < 0.0) {
    if (disc < -1e-14 * b * b) no_region("below the effective potential minimum");
    disc = 0.0;
  }
  const double q = b + std::sqrt(disc);
  return {{2.0 * c / q, q / (2.0 * a_neg)}, {}};
}

// m = 0 scalar linear: r^2 p^2 = -kappa^2 r^4 + K r^2 - c, quadratic in r^2.
TurningPoints linear_massless_turning_points(double energy, const PotentialSpec& spec, int l) {
  const double ek = spec.kinetic_energy(energy);
  const double k2 = spec.kappa() * spec.kappa();
  const double big_k = ek * ek;
  const double c = centrifugal_coefficient(l);
  if (!(big_k > 0.0)) no_region("zero energy");
  double disc = big_k * big_k - 4.0 * k2 * c;
  if (disc < 0.0) {
    if (disc < -1e-14 * big_k * big_k) no_region("below the effective potential minimum");
    disc = 0.0;
  }
  const double s_hi = (big_k + std::sqrt(disc)) / (2.0 * k2);
  const double s_lo = c / (k2 * s_hi);
  const double r_lo = std::sqrt(s_lo);
  const double r_hi = std::sqrt(s_hi);
  return {{r_lo, r_hi}, {-r_hi, -r_lo}};
}

double natural_length(double energy, const PotentialSpec& spec) {
  double scale = 0.0;
  if (spec.mass() > 0.0) scale = std::max(scale, 1.0 / spec.mass());
  if (spec.kappa() > 0.0) scale = std::max(scale, 1.0 / std::sqrt(spec.kappa()));
  const double ek = std::abs(spec.kinetic_energy(energy));
  if (spec.alpha() > 0.0 && ek > 0.0) scale = std::max(scale, spec.alpha() / ek);
  return scale > 0.0 ? scale : 1.0;
}

// Roots of r^2 p^2 on the ray r = sign * x, x in [1e-8, 1e8] * scale.
std::vector<double> roots_on_ray(double energy, const PotentialSpec& spec, int l, double sign,
                                 double scale) {
  constexpr int kPoints = 1601;
  constexpr double kLogMin = -8.0;
  constexpr double kLogMax = 8.0;
  auto f = [&](double x) {
    const double r = sign * x;
    return r * r * effective_p_squared_signed(r, energy, spec, l);
  };

  std::array<double, kPoints> xs{};
  std::array<double, kPoints> fs{};
  for (int k = 0; k < kPoints; ++k) {
    xs[k] = scale * std::pow(10.0, kLogMin + (kLogMax - kLogMin) * k / (kPoints - 1));
    fs[k] = f(xs[k]);
  }

  auto refine = [&](double lo, double hi) {
    std::uintmax_t iters = 200;
    auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2);
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, tol, iters);
    return 0.5 * (a + b);
  };

  std::vector<double> roots;
  for (int k = 0; k + 1 < kPoints; ++k) {
    if ((fs[k] > 0.0) != (fs[k + 1] > 0.0)) {
      if (fs[k] == 0.0) {
        roots.push_back(xs[k]);
      } else {
        roots.push_back(refine(xs[k], xs[k + 1]));
      }
    }
  }

  if (roots.empty()) {
    // A narrow allowed region can hide between grid points; polish the
    // sampled maximum before declaring it forbidden.
    const auto it = std::max_element(fs.begin(), fs.end());
    const int k = static_cast<int>(it - fs.begin());
    const double lo = xs[std::max(k - 1, 0)];
    const double hi = xs[std::min(k + 1, kPoints - 1)];
    const auto [x_max, neg_f] = boost::math::tools::brent_find_minima(
        [&](double x) { return -f(x); }, lo, hi, std::numeric_limits<double>::digits / 2);
    if (-neg_f > 0.0) {
      roots.push_back(refine(lo, x_max));
      roots.push_back(refine(x_max, hi));
    }
  }

  for (double& x : roots) x *= sign;
  std::sort(roots.begin(), roots.end());
  return roots;
}

TurningPoints scanned_turning_points(double energy, const PotentialSpec& spec, int l) {
  const double scale = natural_length(energy, spec);
  TurningPoints tp;
  tp.physical = roots_on_ray(energy, spec, l, 1.0, scale);
  if (tp.physical.empty()) no_region("p^2 <= 0 for all r > 0");
  if (tp.physical.size() != 2) {
    throw Error(ErrorKind::NotConverged,
                "turning-point scan found " + std::to_string(tp.physical.size()) +
                    " physical roots; expected 2");
  }
  if (spec.coupling() == Coupling::Scalar && spec.confining()) {
    tp.nonphysical = roots_on_ray(energy, spec, l, -1.0, scale);
    if (tp.nonphysical.size() != 0 && tp.nonphysical.size() != 2) {
      throw Error(ErrorKind::NotConverged, "turning-point scan: odd number of r < 0 roots");
    }
  }
  return tp;
}

QuadratureResult action_between(double energy, const PotentialSpec& spec, int l, double lo,
                                double hi, const QuadratureOptions& opt) {
  // Where p^2 r^2 is a polynomial with known roots, use its factored form:
  // the expanded one cancels large terms near the endpoints.
  if (spec.family() == Family::Coulomb) {
    const double ek = spec.kinetic_energy(energy);
    const double a_neg = (spec.mass() - ek) * (spec.mass() + ek);
    auto integrand = [&](double r) {
      return std::sqrt(a_neg * std::max((r - lo) * (hi - r), 0.0)) / r;
    };
    return integrate_turning_interval(integrand, lo, hi, opt);
  }
  if (spec.family() == Family::Linear && spec.mass() == 0.0) {
    const double kappa = spec.kappa();
    const double r_lo = std::min(std::abs(lo), std::abs(hi));
    const double r_hi = std::max(std::abs(lo), std::abs(hi));
    auto integrand = [&](double r) {
      const double u = std::abs(r);
      const double inner = std::max((u - r_lo) * (r_hi - u), 0.0);
      return kappa * std::sqrt(inner * (u + r_lo) * (r_hi + u)) / u;
    };
    return integrate_turning_interval(integrand, lo, hi, opt);
  }
  auto integrand = [&](double r) {
    return std::sqrt(std::max(effective_p_squared_signed(r, energy, spec, l), 0.0));
  };
  return integrate_turning_interval(integrand, lo, hi, opt);
}

}  // namespace

TurningPoints find_turning_points(double energy, const PotentialSpec& spec,
                                  const QuantumNumbers& qn) {
  const int l = qn.l();
  check_solvable(spec, l);
  if (!std::isfinite(energy)) throw Error(ErrorKind::InvalidArgument, "energy must be finite");
  if (spec.family() == Family::Coulomb) return coulomb_turning_points(energy, spec, l);
  if (spec.family() == Family::Linear && spec.mass() == 0.0) {
    return linear_massless_turning_points(energy, spec, l);
  }
  return scanned_turning_points(energy, spec, l);
}

PhaseIntegralReport radial_phase_integral(double energy, const PotentialSpec& spec,
                                          const QuantumNumbers& qn, const QuadratureOptions& opt) {
  PhaseIntegralReport report;
  report.turning_points = find_turning_points(energy, spec, qn);
  const auto q = action_between(energy, spec, qn.l(), report.turning_points.inner(),
                                report.turning_points.outer(), opt);
  report.value = q.value;
  report.error_estimate = q.error;
  return report;
}

double radial_action(double energy, const PotentialSpec& spec, const QuantumNumbers& qn) {
  try {
    return radial_phase_integral(energy, spec, qn).value;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoBoundRegion) return 0.0;
    throw;
  }
}

PhaseIntegralReport contour_phase_linear(double energy, const PotentialSpec& spec,
                                         const QuantumNumbers& qn, const QuadratureOptions& opt) {
  if (spec.family() != Family::Linear || spec.coupling() != Coupling::Scalar) {
    throw Error(ErrorKind::InvalidArgument,
                "contour_phase_linear requires a scalar linear potential, got " + spec.describe());
  }
  const int l = qn.l();
  PhaseIntegralReport report;
  report.turning_points = find_turning_points(energy, spec, qn);
  const auto& tp = report.turning_points;

  const auto plus = action_between(energy, spec, l, tp.inner(), tp.outer(), opt);
  QuadratureResult minus;
  if (tp.nonphysical.size() == 2) {
    minus = action_between(energy, spec, l, tp.nonphysical[0], tp.nonphysical[1], opt);
  }

  const double ek = spec.kinetic_energy(energy);
  const double i0 = -2.0 * kPi * (l + 0.5);
  const double i_inf = kPi * ek * ek / spec.kappa();
  report.residue_parts = std::make_pair(i0, i_inf);
  report.cut_contributions = std::make_pair(2.0 * minus.value, 2.0 * plus.value);
  report.value = i0 + i_inf;
  report.error_estimate = 2.0 * (plus.error + minus.error);
  report.discrepancy = std::abs(2.0 * (minus.value + plus.value) - report.value);
  return report;
}

double angular_phase_integral(double m_total, double m_z) {
  if (!(m_z >= 0.0) || !(m_total > m_z)) {
    throw Error(ErrorKind::NoBoundRegion, "angular phase integral requires M > M_z >= 0");
  }
  if (m_z == 0.0) {
    // Constant momentum M over the whole meridian; no turning points.
    return kPi * m_total;
  }
  const double theta1 = std::asin(m_z / m_total);
  const double theta2 = kPi - theta1;
  // M^2 - M_z^2 / sin^2 = M^2 sin(theta - theta1) sin(theta + theta1) / sin^2.
  auto integrand = [&](double theta) {
    const double prod = std::sin(theta - theta1) * std::sin(theta2 - theta);
    return m_total * std::sqrt(std::max(prod, 0.0)) / std::sin(theta);
  };
  QuadratureOptions opt;
  opt.rel_tol = 1e-14;
  return integrate_turning_interval(integrand, theta1, theta2, opt).value;
}

}  // namespace semiwkb
