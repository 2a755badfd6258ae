#include "semiwkb/batch.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semiwkb/closed.hpp"
#include "semiwkb/oracle.hpp"

namespace semiwkb {

int configured_threads() {
  const char* env = std::getenv("SEMIWKB_THREADS");
  if (env == nullptr) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || v < 0) return 0;
  return static_cast<int>(v);
}

namespace {

int resolve_threads(int requested) {
  int t = requested > 0 ? requested : configured_threads();
#ifdef _OPENMP
  if (t <= 0) t = omp_get_max_threads();
#else
  t = 1;
#endif
  return t;
}

}  // namespace

SolveOutcome solve_one(const PotentialSpec& spec, const QuantumNumbers& qn, Method method,
                       const QuantizeOptions& opt) {
  SolveOutcome out;
  out.qn = qn;
  try {
    switch (method) {
      case Method::ClosedForm: out.result = closed_form_eigenvalue(qn, spec); break;
      case Method::NumericWkb: out.result = solve_radial_eigenvalue(qn, spec, opt); break;
      case Method::OdeOracle:
        if (spec.family() != Family::Coulomb || spec.coupling() != Coupling::Vector ||
            spec.two_body()) {
          throw Error(ErrorKind::InvalidArgument,
                      "ode oracle is defined for single-body vector Coulomb only");
        }
        out.result = ode_eigenvalue_kg(qn, spec.mass(), spec.alpha());
        break;
    }
  } catch (const Error& e) {
    out.error_kind = e.kind();
    out.error_message = e.what();
  }
  return out;
}

std::vector<SolveOutcome> solve_spectrum_serial(const PotentialSpec& spec,
                                                std::span<const QuantumNumbers> states,
                                                Method method, const QuantizeOptions& opt) {
  std::vector<SolveOutcome> out;
  out.reserve(states.size());
  for (const auto& qn : states) out.push_back(solve_one(spec, qn, method, opt));
  return out;
}

std::vector<SolveOutcome> solve_spectrum(const PotentialSpec& spec,
                                         std::span<const QuantumNumbers> states, Method method,
                                         const QuantizeOptions& opt, int threads) {
  const long n = static_cast<long>(states.size());
  std::vector<SolveOutcome> out(states.size());
  [[maybe_unused]] const int t = resolve_threads(threads);
  // Costs vary strongly with n_r and l, hence dynamic scheduling.
#pragma omp parallel for schedule(dynamic, 1) num_threads(t)
  for (long i = 0; i < n; ++i) {
    out[i] = solve_one(spec, states[i], method, opt);
  }
  return out;
}

std::vector<double> sample_wavefunction_serial(const WkbWavefunction& wf,
                                               std::span<const double> radii) {
  std::vector<double> out;
  out.reserve(radii.size());
  for (double r : radii) out.push_back(wkb_radial_wavefunction(r, wf));
  return out;
}

std::vector<double> sample_wavefunction(const WkbWavefunction& wf, std::span<const double> radii,
                                        int threads) {
  const long n = static_cast<long>(radii.size());
  std::vector<double> out(radii.size());
  [[maybe_unused]] const int t = resolve_threads(threads);
  bool failed = false;
#pragma omp parallel for schedule(static) num_threads(t)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = wkb_radial_wavefunction(radii[i], wf);
    } catch (...) {
#pragma omp atomic write
      failed = true;
    }
  }
  // Re-run serially to surface the first error with its message.
  if (failed) return sample_wavefunction_serial(wf, radii);
  return out;
}

std::vector<QuantumNumbers> state_grid(int nr_max, int l_max) {
  if (nr_max < 0 || l_max < 0) {
    throw Error(ErrorKind::InvalidArgument, "state grid bounds must be >= 0");
  }
  std::vector<QuantumNumbers> states;
  for (int nr = 0; nr <= nr_max; ++nr) {
    for (int l = 0; l <= l_max; ++l) states.emplace_back(nr, l);
  }
  return states;
}

}  // namespace semiwkb
