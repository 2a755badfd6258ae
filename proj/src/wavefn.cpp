#include "semiwkb/wavefn.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace semiwkb {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

WkbWavefunction::WkbWavefunction(const PotentialSpec& spec, const QuantumNumbers& qn,
                                 double energy, double tolerance)
    : spec_(spec), qn_(qn), energy_(energy) {
  const auto report = radial_phase_integral(energy, spec, qn);
  const double residual = std::abs(report.value - quantization_target(qn.n_r()));
  if (!(residual <= tolerance)) {
    throw Error(ErrorKind::NotEigenvalue,
                "energy is not a quantized eigenvalue (residual " + std::to_string(residual) + ")");
  }
  r_in_ = report.turning_points.inner();
  r_out_ = report.turning_points.outer();
  total_phase_ = report.value;
  const double mean_momentum = total_phase_ / (r_out_ - r_in_);
  if (spec.family() == Family::Coulomb) {
    const double ek = spec.kinetic_energy(energy);
    standing_momentum_ = std::sqrt((spec.mass() - ek) * (spec.mass() + ek));
  } else {
    standing_momentum_ = mean_momentum;
  }
  chi1_ = standing_momentum_ * r_in_;
  momentum_floor_ = 1e-12 * mean_momentum;

  // In t the phase integrand is an analytic function of cos t, so its
  // cosine coefficients decay geometrically and integrate term by term.
  const double len = r_out_ - r_in_;
  auto integrand = [&](double t) {
    const double sn = std::sin(0.5 * t);
    const double cs = std::cos(0.5 * t);
    const double r = t < 0.5 * kPi ? r_in_ + len * sn * sn : r_out_ - len * cs * cs;
    return local_wavenumber(r) * len * sn * cs;
  };
  for (int n = 64;; n *= 2) {
    std::vector<double> g(n);
    for (int j = 0; j < n; ++j) g[j] = integrand((j + 0.5) * kPi / n);
    phase_series_.assign(n, 0.0);
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += g[j] * std::cos(k * (j + 0.5) * kPi / n);
      phase_series_[k] = (k == 0 ? 1.0 : 2.0) * acc / n;
    }
    double tail = 0.0;
    for (int k = 3 * n / 4; k < n; ++k) tail = std::max(tail, std::abs(phase_series_[k]));
    if (tail <= 1e-14 * std::abs(phase_series_[0]) || n >= 4096) break;
  }

  // Max-abs = 1 over a fixed interior sample of the allowed region; the
  // regularized turning points themselves are excluded.
  constexpr int kSamples = 2048;
  double peak = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const double s = std::sin(0.5 * (k + 0.5) * kPi / kSamples);
    const double r = r_in_ + (r_out_ - r_in_) * s * s;
    peak = std::max(peak, std::abs(raw(r)));
  }
  normalization_ = 1.0 / peak;
}

double WkbWavefunction::momentum(double r) const {
  return std::sqrt(std::abs(effective_p_squared(r, energy_, spec_, qn_)));
}

double WkbWavefunction::local_wavenumber(double r) const {
  return std::sqrt(std::max(effective_p_squared(r, energy_, spec_, qn_), 0.0));
}

double WkbWavefunction::phase(double r) const {
  if (r < r_in_ || r > r_out_) {
    throw Error(ErrorKind::Domain, "phase: r outside the classically allowed region");
  }
  const double frac = (r - r_in_) / (r_out_ - r_in_);
  const double t = frac <= 0.5 ? 2.0 * std::asin(std::sqrt(frac))
                               : kPi - 2.0 * std::asin(std::sqrt(1.0 - frac));
  double value = phase_series_[0] * t;
  for (std::size_t k = 1; k < phase_series_.size(); ++k) {
    value += phase_series_[k] * std::sin(k * t) / k;
  }
  return value;
}

namespace {

// int_{a}^{b} q(r) dr for 0 < a < b with q ~ Lambda/r near a: in ln r the
// integrand q(r) r is smooth.
template <class Q>
double log_interval(Q&& q, double a, double b) {
  auto g = [&](double x) {
    const double r = std::exp(x);
    return q(r) * r;
  };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, std::log(a), std::log(b),
                                                                         20, 1e-12);
}

}  // namespace

double WkbWavefunction::log_abs(double r, int* sign) const {
  if (!(r > 0.0)) throw Error(ErrorKind::Domain, "wavefunction: r must be > 0");
  auto q = [this](double x) {
    return std::sqrt(std::max(-effective_p_squared(x, energy_, spec_, qn_), 0.0));
  };
  const double amp = -0.5 * std::log(std::max(momentum(r), momentum_floor_));
  const double log_norm = std::log(normalization_);
  if (r > r_out_) {
    const double decay = integrate_from_turning_point(q, r_out_, r).value;
    *sign = qn_.n_r() % 2 == 0 ? 1 : -1;
    return log_norm - std::log(2.0) + amp - decay;
  }
  if (r < r_in_) {
    double decay = 0.0;
    const double split = 0.5 * r_in_;
    if (r < split) {
      decay = log_interval(q, r, split) - integrate_from_turning_point(q, r_in_, split).value;
    } else {
      decay = -integrate_from_turning_point(q, r_in_, r).value;
    }
    *sign = 1;
    return log_norm - std::log(2.0) + amp - decay;
  }
  const double c = std::cos(phase(r) - 0.25 * kPi);
  *sign = c > 0.0 ? 1 : (c < 0.0 ? -1 : 0);
  return log_norm + amp + std::log(std::abs(c));
}

double WkbWavefunction::raw(double r) const {
  // Before normalization_ is fixed it equals 1, so log_abs gives the raw shape.
  int sign = 0;
  const double v = log_abs(r, &sign);
  return sign == 0 ? 0.0 : sign * std::exp(v);
}

double wkb_radial_wavefunction(double r, const WkbWavefunction& wf) {
  int sign = 0;
  const double v = wf.log_abs(r, &sign);
  return sign == 0 ? 0.0 : sign * std::exp(v);
}

double radial_wavefunction(double r, const WkbWavefunction& wf) {
  return wkb_radial_wavefunction(r, wf) / r;
}

double standing_wave(double r, const WkbWavefunction& wf) {
  return wf.normalization() *
         std::cos(wf.standing_momentum() * r - wf.chi1() - 0.25 * kPi);
}

int count_nodes(const WkbWavefunction& wf, int samples) {
  std::vector<double> radii;
  for (int k = 1; k <= 10 && wf.r_in() > 0.0; ++k) radii.push_back(wf.r_in() * 0.1 * k);
  for (int k = 0; k < samples; ++k) {
    const double s = std::sin(0.5 * (k + 0.5) * kPi / samples);
    radii.push_back(wf.r_in() + (wf.r_out() - wf.r_in()) * s * s);
  }
  for (int k = 1; k <= 10; ++k) radii.push_back(wf.r_out() * (1.0 + 0.1 * k));

  int nodes = 0;
  int prev = 0;
  for (double r : radii) {
    int sign = 0;
    wf.log_abs(r, &sign);
    if (sign != 0) {
      if (prev != 0 && sign != prev) ++nodes;
      prev = sign;
    }
  }
  return nodes;
}

double small_r_exponent(const WkbWavefunction& wf) {
  if (wf.spec().family() != Family::Coulomb) {
    throw Error(ErrorKind::InvalidArgument, "small_r_exponent requires a Coulomb potential");
  }
  if (!(wf.r_in() > 0.0)) {
    throw Error(ErrorKind::NotConverged,
                "small_r_exponent: no forbidden region below r_in (Lambda = 0)");
  }
  constexpr int kPoints = 9;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::vector<double> xs, ys;
  for (int j = 0; j < kPoints; ++j) {
    const double r = wf.r_in() * std::pow(10.0, -6.0 + 2.0 * j / (kPoints - 1));
    int sign = 0;
    const double x = std::log(r);
    const double y = wf.log_abs(r, &sign) - x;  // ln R = ln R~ - ln r
    xs.push_back(x);
    ys.push_back(y);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = kPoints;
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double rss = 0.0;
  for (int j = 0; j < kPoints; ++j) {
    const double d = ys[j] - (slope * xs[j] + intercept);
    rss += d * d;
  }
  if (std::sqrt(rss / n) > 1e-3) {
    throw Error(ErrorKind::NotConverged, "small_r_exponent: data not a power law");
  }
  return slope;
}

}  // namespace semiwkb
