#include "semiwkb/oracle.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace semiwkb {

namespace {

// u'' = (c2/r^2 + c1/r + c0) u
struct RadialOperator {
  double c2;
  double c1;
  double c0;
};

struct ShotResult {
  int nodes;
};

// Integrates outward from r_min with the regular Frobenius start
// u ~ r^s (1 + c1 r / (2s)) and counts sign changes over the whole grid.
ShotResult shoot(const RadialOperator& op, const RadialGrid& grid) {
  const double s = 0.5 + std::sqrt(0.25 + op.c2);
  const double a1 = op.c1 / (2.0 * s);
  const int n = grid.points;
  constexpr double kRescale = 1e200;

  // Beyond the vertex of c0 r^2 + c1 r the potential term is increasing.
  auto past_barrier = [&](double r) { return op.c0 > 0.0 && 2.0 * op.c0 * r + op.c1 > 0.0; };

  int nodes = 0;
  double prev = 0.0;
  auto track = [&](double y) {
    if (y != 0.0) {
      if (prev != 0.0 && (y > 0.0) != (prev > 0.0)) ++nodes;
      prev = y;
    }
  };

  if (grid.spacing == GridSpacing::Logarithmic) {
    // x = ln r, u = e^{x/2} y  =>  y'' = (c2 + 1/4 + c1 r + c0 r^2) y
    const double x0 = std::log(grid.r_min);
    const double h = (std::log(grid.r_max) - x0) / (n - 1);
    const double h2 = h * h / 12.0;
    auto g = [&](double r) { return op.c2 + 0.25 + r * (op.c1 + op.c0 * r); };
    auto start = [&](double r) { return std::pow(r, s - 0.5) * (1.0 + a1 * r); };
    double r0 = grid.r_min;
    double r1 = std::exp(x0 + h);
    double y0 = start(r0);
    double y1 = start(r1);
    double w0 = (1.0 - h2 * g(r0)) * y0;
    double w1 = (1.0 - h2 * g(r1)) * y1;
    track(y0);
    track(y1);
    for (int k = 2; k < n; ++k) {
      const double r = std::exp(x0 + k * h);
      // Deep in the outer forbidden region g only grows and y cannot turn;
      // Numerov would go unstable there (h^2 g / 12 > 1) and fake nodes.
      if (past_barrier(r) && h2 * g(r) > 0.5) break;
      // Numerov in the w = (1 - h^2 G/12) y form.
      const double w2 = 2.0 * w1 - w0 + 12.0 * h2 * g(r1) * y1;
      const double y2 = w2 / (1.0 - h2 * g(r));
      track(y2);
      w0 = w1;
      w1 = w2;
      y1 = y2;
      r1 = r;
      if (std::abs(y1) > kRescale) {
        w0 /= kRescale;
        w1 /= kRescale;
        y1 /= kRescale;
      }
    }
  } else {
    const double h = (grid.r_max - grid.r_min) / (n - 1);
    const double h2 = h * h / 12.0;
    auto q = [&](double r) { return op.c2 / (r * r) + op.c1 / r + op.c0; };
    auto start = [&](double r) { return std::pow(r, s) * (1.0 + a1 * r); };
    double r1 = grid.r_min + h;
    double u0 = start(grid.r_min);
    double u1 = start(r1);
    double w0 = (1.0 - h2 * q(grid.r_min)) * u0;
    double w1 = (1.0 - h2 * q(r1)) * u1;
    track(u0);
    track(u1);
    for (int k = 2; k < n; ++k) {
      const double r = grid.r_min + k * h;
      if (past_barrier(r) && h2 * q(r) > 0.5) break;
      const double w2 = 2.0 * w1 - w0 + 12.0 * h2 * q(r1) * u1;
      const double u2 = w2 / (1.0 - h2 * q(r));
      track(u2);
      w0 = w1;
      w1 = w2;
      u1 = u2;
      r1 = r;
      if (std::abs(u1) > kRescale) {
        w0 /= kRescale;
        w1 /= kRescale;
        u1 /= kRescale;
      }
    }
  }
  return {nodes};
}

// Bisection on the node count of the outward solution: N(E) counts the
// Dirichlet eigenvalues below E, so the jump n_r -> n_r + 1 marks E_{n_r}.
template <class MakeOperator>
EigenvalueResult bisect_nodes(const QuantumNumbers& qn, const RadialGrid& grid, double lo,
                              double hi, MakeOperator&& make_op) {
  grid.validate();
  const int target = qn.n_r();
  if (shoot(make_op(lo), grid).nodes > target) {
    throw Error(ErrorKind::NotConverged, "ode oracle: lower energy bound already above state");
  }
  if (shoot(make_op(hi), grid).nodes <= target) {
    throw Error(ErrorKind::NotConverged,
                "ode oracle: state not reached below threshold (grid too short?)");
  }
  int lo_nodes = 0;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int nodes = shoot(make_op(mid), grid).nodes;
    if (nodes > target) {
      hi = mid;
    } else {
      lo = mid;
      lo_nodes = nodes;
    }
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))) {
      break;
    }
  }
  EigenvalueResult out;
  out.energy = 0.5 * (lo + hi);
  out.method = Method::OdeOracle;
  out.residual = hi - lo;
  out.qn = qn;
  out.node_count = lo_nodes;
  return out;
}

void require_bound(double m, double alpha) {
  if (!(m > 0.0)) throw Error(ErrorKind::InvalidArgument, "ode oracle: mass must be > 0");
  if (!(alpha >= 0.0)) throw Error(ErrorKind::InvalidArgument, "ode oracle: alpha must be >= 0");
  if (alpha == 0.0) {
    throw Error(ErrorKind::NoBoundState, "no bound state below threshold at alpha = 0");
  }
}

}  // namespace

RadialGrid RadialGrid::default_for(const QuantumNumbers& qn, double m, double alpha) {
  const double bohr = 1.0 / (m * alpha);
  const double n = qn.principal();
  return {1e-6 * bohr, 50.0 * n * n * bohr, 20000, GridSpacing::Logarithmic};
}

void RadialGrid::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
    throw Error(ErrorKind::InvalidArgument, "radial grid requires 0 < r_min < r_max");
  }
  if (points < 1000) throw Error(ErrorKind::InvalidArgument, "radial grid requires >= 1000 points");
}

EigenvalueResult ode_eigenvalue_kg(const QuantumNumbers& qn, double m, double alpha,
                                   const RadialGrid& grid) {
  require_bound(m, alpha);
  const double l = qn.l();
  if (alpha > l + 0.5) {
    throw Error(ErrorKind::Supercritical, "supercritical coupling for Klein-Gordon");
  }
  auto make_op = [&](double e) {
    return RadialOperator{l * (l + 1.0) - alpha * alpha, -2.0 * alpha * e, (m - e) * (m + e)};
  };
  return bisect_nodes(qn, grid, 0.0, m * (1.0 - 1e-14), make_op);
}

EigenvalueResult ode_eigenvalue_kg(const QuantumNumbers& qn, double m, double alpha) {
  require_bound(m, alpha);
  return ode_eigenvalue_kg(qn, m, alpha, RadialGrid::default_for(qn, m, alpha));
}

EigenvalueResult ode_eigenvalue_nr(const QuantumNumbers& qn, double m, double alpha,
                                   const RadialGrid& grid) {
  require_bound(m, alpha);
  const double l = qn.l();
  auto make_op = [&](double e) {
    return RadialOperator{l * (l + 1.0), -2.0 * m * alpha, -2.0 * m * e};
  };
  const double ground = 0.5 * m * alpha * alpha;
  return bisect_nodes(qn, grid, -2.0 * ground, -1e-14 * ground, make_op);
}

EigenvalueResult ode_eigenvalue_nr(const QuantumNumbers& qn, double m, double alpha) {
  require_bound(m, alpha);
  return ode_eigenvalue_nr(qn, m, alpha, RadialGrid::default_for(qn, m, alpha));
}

}  // namespace semiwkb
