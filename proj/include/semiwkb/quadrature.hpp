#pragma once

// Quadrature for phase integrals whose integrands have square-root (or
// inverse-square-root) behaviour at the turning points.
//
// Two-sided rule: x = a + (b - a) sin^2(phi/2), phi in [0, pi]. For an
// integrand sqrt((x-a)(b-x)) h(x), or (x-a)^(-1/2) sqrt(b-x) h(x), the mapped
// integrand is an analytic function of cos(phi), so the midpoint rule in phi
// (Gauss-Chebyshev nodes) converges geometrically. Levels are tripled so each
// refinement reuses every previous node.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include "semiwkb/error.hpp"

namespace semiwkb {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // |I_3n - I_n| of the last refinement
  int evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-13;
  double abs_tol = 1e-300;
  int max_levels = 11;  // 6 * 3^10 ~ 3.5e5 nodes at most
};

template <class F>
QuadratureResult integrate_turning_interval(F&& f, double a, double b,
                                            const QuadratureOptions& opt = {}) {
  QuadratureResult out;
  if (!(b > a)) return out;
  constexpr double pi = std::numbers::pi;
  const double len = b - a;
  auto mapped = [&](double phi) {
    const double s = std::sin(0.5 * phi);
    const double c = std::cos(0.5 * phi);
    const double x = phi < 0.5 * pi ? a + len * s * s : b - len * c * c;
    return f(x) * len * s * c;
  };

  int n = 6;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += mapped((k + 0.5) * pi / n);
  out.evaluations = n;
  double previous = sum * pi / n;

  for (int level = 1; level < opt.max_levels; ++level) {
    const int n3 = 3 * n;
    for (int k = 0; k < n; ++k) {
      sum += mapped((3 * k + 0.5) * pi / n3);
      sum += mapped((3 * k + 2.5) * pi / n3);
    }
    out.evaluations += 2 * n;
    n = n3;
    const double current = sum * pi / n;
    out.value = current;
    out.error = std::abs(current - previous);
    if (!std::isfinite(current)) {
      throw Error(ErrorKind::NotConverged, "turning-point quadrature: non-finite integrand");
    }
    if (level >= 2 && out.error <= std::max(opt.rel_tol * std::abs(current), opt.abs_tol)) {
      return out;
    }
    previous = current;
  }
  throw Error(ErrorKind::NotConverged,
              "turning-point quadrature did not converge; estimate " + std::to_string(out.error));
}

/// Integral from a turning point `a` to an ordinary point `b` (either side).
/// x = a + (b - a) s^2 removes the square-root endpoint; the remainder is
/// handled by adaptive Gauss-Kronrod.
template <class F>
QuadratureResult integrate_from_turning_point(F&& f, double a, double b, double rel_tol = 1e-12) {
  QuadratureResult out;
  if (a == b) return out;
  const double d = b - a;
  auto mapped = [&](double s) { return f(a + d * s * s) * 2.0 * d * s; };
  double err = 0.0;
  out.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(mapped, 0.0, 1.0, 20,
                                                                              rel_tol, &err);
  out.error = err;
  out.evaluations = -1;
  if (!std::isfinite(out.value)) {
    throw Error(ErrorKind::NotConverged, "one-sided quadrature: non-finite integrand");
  }
  return out;
}

}  // namespace semiwkb
