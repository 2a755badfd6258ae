// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "semiwkb/batch.hpp"
#include "semiwkb/closed.hpp"
#include "semiwkb/error.hpp"
#include "semiwkb/oracle.hpp"
#include "semiwkb/phase.hpp"
#include "semiwkb/quantize.hpp"
#include "semiwkb/regge.hpp"
#include "semiwkb/wavefn.hpp"

using namespace semiwkb;
using std::numbers::pi;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string qn_text(const QuantumNumbers& qn) {
  return "(n_r=" + std::to_string(qn.n_r()) + ", l=" + std::to_string(qn.l()) + ")";
}

// Derived oracle: real-axis WKB for the massless funnel is an oscillator
// integral with A = E^2/4 + 2 kappa alpha_s and B = alpha_s^2 + (l + 1/2)^2.
double funnel_massless_oracle(const QuantumNumbers& qn, double kappa, double alpha_s) {
  const double h = qn.l() + 0.5;
  return 8.0 * kappa * (2.0 * qn.n_r() + 1.0 - alpha_s + std::sqrt(alpha_s * alpha_s + h * h));
}

Verdict table_reproduction() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const auto cal = HydrogenCalibration::from_rydberg(13.6155700, 137.036);
  const auto rows = table1(cal.mass, cal.alpha);
  const auto& ref = hydrogen_table_reference();
  double worst = 0.0;
  std::string worst_at;
  v.require(rows.size() == 9 && ref.size() == 9, "nine rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double got[3] = {rows[i].e_nr, rows[i].e_kg, rows[i].e_sc};
    for (int c = 0; c < 3; ++c) {
      const double dev = std::abs(got[c] - ref[i][c]);
      if (dev > worst) {
        worst = dev;
        worst_at = qn_text(rows[i].qn) + " column " + std::to_string(c);
      }
      v.require(dev <= 1e-5, qn_text(rows[i].qn));
    }
  }
  const double t = seconds_since(t0);
  v.require(t < 1.0, "runtime");
  v.detail << "max |dev| = " << worst << " eV at " << worst_at << " (calibration residual), "
           << t << " s";
  return v;
}

Verdict column_differences() {
  Verdict v;
  const auto cal = HydrogenCalibration::from_rydberg(13.6155700, 137.036);
  const auto rows = table1(cal.mass, cal.alpha);
  const auto& ref = hydrogen_table_reference();
  double worst = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double dkg = (rows[i].e_kg - rows[i].e_nr) - (ref[i][1] - ref[i][0]);
    const double dsc = (rows[i].e_sc - rows[i].e_nr) - (ref[i][2] - ref[i][0]);
    worst = std::max({worst, std::abs(dkg), std::abs(dsc)});
    v.require(std::abs(dkg) <= 2e-5 && std::abs(dsc) <= 2e-5, qn_text(rows[i].qn));
  }
  v.require(std::abs((rows[0].e_kg - rows[0].e_nr) - (-0.00091)) <= 2e-5, "row 1 KG-NR");
  v.require(std::abs((rows[0].e_sc - rows[0].e_nr) - 0.00127) <= 2e-5, "row 1 SC-NR");
  v.require(std::abs((rows[2].e_kg - rows[2].e_nr) - (-0.00015)) <= 2e-5, "l=0 n_r=1 KG-NR");
  v.require(std::abs((rows[2].e_sc - rows[2].e_nr) - 0.00017) <= 2e-5, "l=0 n_r=1 SC-NR");
  v.detail << "max |difference mismatch| = " << worst << " eV";
  return v;
}

Verdict quantizer_closed() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const auto states = state_grid(5, 5);
  std::vector<PotentialSpec> specs;
  for (double a : {0.1, 0.3, 0.5}) {
    specs.push_back(PotentialSpec::coulomb(Coupling::Vector, 1.0, a));
    specs.push_back(PotentialSpec::coulomb(Coupling::Scalar, 1.0, a));
  }
  for (double k : {0.14, 0.2}) specs.push_back(PotentialSpec::linear(Coupling::Scalar, 0.0, k, true));
  double worst = 0.0;
  int solved = 0;
  for (const auto& spec : specs) {
    const auto wkb = solve_spectrum(spec, states, Method::NumericWkb, {}, configured_threads());
    for (const auto& o : wkb) {
      if (!o.ok()) {
        v.require(false, spec.describe() + " " + qn_text(o.qn) + ": " + o.error_message);
        continue;
      }
      const double closed = closed_form_eigenvalue(o.qn, spec).energy;
      const double rel = std::abs(o.result->energy - closed) / closed;
      worst = std::max(worst, rel);
      v.require(rel <= 1e-8, spec.describe() + " " + qn_text(o.qn));
      ++solved;
    }
  }
  const double t = seconds_since(t0);
  v.require(t < 10.0, "runtime");
  v.detail << solved << " states, max rel = " << worst << ", " << t << " s";
  return v;
}

Verdict contour_identity() {
  Verdict v;
  double worst = 0.0;
  for (double kappa : {0.14, 0.2}) {
    const auto spec = PotentialSpec::linear(Coupling::Scalar, 0.0, kappa, true);
    for (const auto& qn : state_grid(3, 3)) {
      const double e = std::sqrt(linear_scalar_energy_sq(qn, kappa));
      const auto rep = contour_phase_linear(e, spec, qn);
      const double target = 4.0 * pi * (qn.n_r() + 0.5);
      const double cuts = rep.cut_contributions->first + rep.cut_contributions->second;
      worst = std::max({worst, std::abs(cuts - target), std::abs(rep.value - target)});
      v.require(std::abs(cuts - target) <= 1e-8, "cut sum " + qn_text(qn));
      v.require(std::abs(rep.value - target) <= 1e-8, "residue sum " + qn_text(qn));
    }
  }
  v.detail << "m=0 max |error| = " << worst << "; m>0 discrepancy (n_r=0,l=0, kappa=0.2):";
  // Massive case: reported, and must shrink continuously to the m = 0 value.
  const QuantumNumbers qn(0, 0);
  const double e = std::sqrt(linear_scalar_energy_sq(qn, 0.2));
  double previous = std::numeric_limits<double>::infinity();
  for (double m : {0.3, 0.1, 0.03, 0.01, 0.001, 1e-6}) {
    const auto spec = PotentialSpec::linear(Coupling::Scalar, m, 0.2, true);
    try {
      const double d = *contour_phase_linear(e, spec, qn).discrepancy;
      v.detail << " m=" << m << ":" << d;
      v.require(std::isfinite(d), "finite discrepancy");
      v.require(d <= std::max(previous, 1e-9), "discrepancy grows as m -> 0");
      previous = d;
    } catch (const Error& err) {
      v.detail << " m=" << m << ":" << to_string(err.kind());
    }
  }
  v.require(previous <= 1e-8, "discrepancy at m -> 0");
  return v;
}

Verdict funnel_scaling() {
  Verdict v;
  const double kappa = 0.14;
  double worst_oracle = 0.0;
  double lo_ratio = 1e300, hi_ratio = 0.0;
  for (const auto& qn : state_grid(3, 3)) {
    auto deviation = [&](double alpha_s) {
      const auto spec = PotentialSpec::funnel(Coupling::Scalar, 0.0, alpha_s, kappa, true);
      const double e = solve_radial_eigenvalue(qn, spec).energy;
      const double e_sq = e * e;
      const double oracle = funnel_massless_oracle(qn, kappa, alpha_s);
      const double err = std::abs(e_sq - oracle);
      worst_oracle = std::max(worst_oracle, err);
      v.require(err <= 1e-8, "oracle " + qn_text(qn));
      return e_sq - funnel_energy_sq(qn, kappa, alpha_s);
    };
    for (double a : {0.2, 0.1}) {
      const double ratio = deviation(a) / deviation(0.5 * a);
      lo_ratio = std::min(lo_ratio, ratio);
      hi_ratio = std::max(hi_ratio, ratio);
      v.require(std::abs(ratio - 4.0) <= 0.4, "ratio " + qn_text(qn));
    }
  }
  v.detail << "deviation ratio in [" << lo_ratio << ", " << hi_ratio
           << "], max |E^2 - oracle| = " << worst_oracle;
  return v;
}

Verdict angular() {
  Verdict v;
  double worst = 0.0;
  for (int l = 0; l <= 10; ++l) {
    for (int mi = 0; mi <= l; ++mi) {
      const double got = angular_phase_integral(l + 0.5, mi);
      const double err = std::abs(got - pi * (l - mi + 0.5));
      const double m_total = invert_angular_quantization(l - mi, mi);
      const double err_m = std::abs(m_total * m_total - (l + 0.5) * (l + 0.5));
      worst = std::max({worst, err, err_m});
      const std::string at = "l=" + std::to_string(l) + " m=" + std::to_string(mi);
      v.require(err <= 1e-10, "integral " + at);
      v.require(err_m <= 1e-10, "inversion " + at);
      v.require(angular_eigenvalues(l, mi).m_squared == (l + 0.5) * (l + 0.5), "M^2 " + at);
    }
  }
  v.detail << "max error = " << worst;
  return v;
}

Verdict fine_structure() {
  Verdict v;
  double worst = 0.0;
  for (double alpha : {0.05, 0.02, 0.01, 0.005}) {
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l <= std::min(2, n - 1); ++l) {
        const QuantumNumbers qn(n - 1 - l, l);
        const double shift = coulomb_scalar_binding(qn, 1.0, alpha) + alpha * alpha / (2.0 * n * n);
        const double ratio = shift / fine_structure_sc(qn, 1.0, alpha);
        worst = std::max(worst, std::abs(ratio - 1.0) / (alpha * alpha));
        v.require(std::abs(ratio - 1.0) <= 5.0 * alpha * alpha,
                  "alpha=" + std::to_string(alpha) + " " + qn_text(qn));
      }
    }
  }
  v.detail << "max |ratio - 1| / alpha^2 = " << worst;
  return v;
}

Verdict ode_agreement() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  double worst_kg = 0.0, worst_nr = 0.0;
  for (double alpha : {0.1, 0.3}) {
    const auto spec = PotentialSpec::coulomb(Coupling::Vector, 1.0, alpha);
    const auto states = state_grid(3, 3);
    const auto kg = solve_spectrum(spec, states, Method::OdeOracle, {}, configured_threads());
    for (std::size_t i = 0; i < states.size(); ++i) {
      const auto& qn = states[i];
      if (!kg[i].ok()) {
        v.require(false, "kg " + qn_text(qn) + ": " + kg[i].error_message);
        continue;
      }
      const double exact = coulomb_vector_energy(qn, 1.0, alpha);
      const double rel = std::abs(kg[i].result->energy - exact) / exact;
      worst_kg = std::max(worst_kg, rel);
      v.require(rel <= 1e-6, "kg " + qn_text(qn));

      const double nr_exact = schrodinger_coulomb_energy(qn, 1.0, alpha);
      const double rel_nr =
          std::abs(ode_eigenvalue_nr(qn, 1.0, alpha).energy - nr_exact) / std::abs(nr_exact);
      worst_nr = std::max(worst_nr, rel_nr);
      v.require(rel_nr <= 1e-6, "nr " + qn_text(qn));
    }
  }
  // Convergence order from successive grid halvings.
  double min_order = 1e300;
  for (const auto& qn : {QuantumNumbers(0, 0), QuantumNumbers(1, 1), QuantumNumbers(2, 0)}) {
    const double alpha = 0.3;
    auto grid = RadialGrid::default_for(qn, 1.0, alpha);
    double errs[3];
    int points = 1000;
    for (double& err : errs) {
      grid.points = points;
      err = std::abs(ode_eigenvalue_nr(qn, 1.0, alpha, grid).energy -
                     schrodinger_coulomb_energy(qn, 1.0, alpha));
      points = 2 * points - 1;
    }
    for (int k = 0; k < 2; ++k) {
      const double order = std::log2(errs[k] / errs[k + 1]);
      min_order = std::min(min_order, order);
      v.require(order >= 2.0, "grid order " + qn_text(qn));
    }
  }
  const double t = seconds_since(t0);
  v.require(t < 60.0, "runtime");
  v.detail << "max rel KG = " << worst_kg << ", NR = " << worst_nr
           << ", min observed order = " << min_order << ", " << t << " s";
  return v;
}

Verdict nodes_and_exponents() {
  Verdict v;
  const PotentialSpec specs[] = {
      PotentialSpec::coulomb(Coupling::Vector, 1.0, 0.3),
      PotentialSpec::coulomb(Coupling::Scalar, 1.0, 0.3),
      PotentialSpec::linear(Coupling::Scalar, 0.0, 0.2, true),
      PotentialSpec::linear(Coupling::Scalar, 0.5, 0.2, true),
      PotentialSpec::funnel(Coupling::Scalar, 0.3, 0.3, 0.2, true),
  };
  int checked = 0;
  for (const auto& spec : specs) {
    for (int n = 0; n <= 5; ++n) {
      for (int l : {0, 1, 2}) {
        const QuantumNumbers qn(n, l);
        const WkbWavefunction wf(spec, qn, solve_radial_eigenvalue(qn, spec).energy);
        v.require(count_nodes(wf) == n, spec.describe() + " " + qn_text(qn));
        ++checked;
      }
    }
  }
  double worst = 0.0;
  for (double alpha : {0.1, 0.3, 0.5}) {
    const auto sc = PotentialSpec::coulomb(Coupling::Scalar, 1.0, alpha);
    const auto vc = PotentialSpec::coulomb(Coupling::Vector, 1.0, std::min(alpha, 0.45));
    for (int n : {0, 1}) {
      const QuantumNumbers qn(n, 0);
      const double es = small_r_exponent(WkbWavefunction(sc, qn, solve_radial_eigenvalue(qn, sc).energy));
      const double want_s = std::sqrt(0.25 + alpha * alpha) - 0.5;
      const double av = vc.alpha();
      const double ev = small_r_exponent(WkbWavefunction(vc, qn, solve_radial_eigenvalue(qn, vc).energy));
      const double want_v = std::sqrt(0.25 - av * av) - 0.5;
      worst = std::max({worst, std::abs(es - want_s), std::abs(ev - want_v)});
      v.require(std::abs(es - want_s) <= 1e-3 && es > 0.0, "scalar exponent");
      v.require(std::abs(ev - want_v) <= 1e-3 && ev < 0.0, "vector exponent");
    }
  }
  v.detail << checked << " node counts, max exponent error = " << worst;
  return v;
}

Verdict regge_roundtrip() {
  Verdict v;
  std::vector<MesonRecord> data;
  for (int n = 0; n <= 1; ++n) {
    for (const auto& p : regge_trajectory(n, 2, 0.14, 0.39)) {
      data.push_back({"synthetic", std::sqrt(p.e_sq), p.l, n});
    }
  }
  const auto fit = fit_regge(data);
  v.require(std::abs(fit.kappa - 0.14) <= 1e-12, "kappa");
  v.require(std::abs(fit.alpha_s - 0.39) <= 1e-12, "alpha_s");
  double worst_slope = 0.0;
  for (double kappa : {0.14, 0.2}) {
    const auto t = regge_trajectory(0, 8, kappa, 0.39);
    for (std::size_t i = 1; i < t.size(); ++i) {
      const double d = std::abs((t[i].e_sq - t[i - 1].e_sq) - 8.0 * kappa);
      worst_slope = std::max(worst_slope, d);
      v.require(d <= 4.0 * kEps * t[i].e_sq, "slope");
    }
  }
  double worst_shift = 0.0;
  for (const auto& qn : state_grid(3, 3)) {
    const double lhs = funnel_energy_sq(qn, 0.14, 0.39);
    const double rhs = linear_scalar_energy_sq(qn, 0.14) - funnel_shift(0.14, 0.39);
    worst_shift = std::max(worst_shift, std::abs(lhs - rhs) / rhs);
    v.require(std::abs(lhs - rhs) <= 4.0 * kEps * std::abs(rhs), "shift identity");
  }
  v.detail << "|dkappa| = " << std::abs(fit.kappa - 0.14)
           << ", |dalpha_s| = " << std::abs(fit.alpha_s - 0.39) << ", slope err = " << worst_slope
           << ", shift rel err = " << worst_shift;
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"hydrogen table reproduction", table_reproduction},
      {"column differences", column_differences},
      {"quantizer matches closed forms", quantizer_closed},
      {"contour identity", contour_identity},
      {"funnel perturbation scaling", funnel_scaling},
      {"angular quantization", angular},
      {"fine-structure limit", fine_structure},
      {"ode oracle agreement", ode_agreement},
      {"node counts and small-r exponents", nodes_and_exponents},
      {"regge roundtrip", regge_roundtrip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    if (!v.pass) ++failures;
    std::printf("%s [%zu] %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
