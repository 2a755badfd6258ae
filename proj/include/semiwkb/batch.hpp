#pragma once

// Batch kernels. Every solve in a batch is independent, so the OpenMP
// versions split the index range across threads; the *_serial versions are
// the reference implementations the tests compare against.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiwkb/model.hpp"
#include "semiwkb/quantize.hpp"
#include "semiwkb/wavefn.hpp"

namespace semiwkb {

/// Thread cap from SEMIWKB_THREADS (unset or 0 = runtime default).
int configured_threads();

struct SolveOutcome {
  QuantumNumbers qn{0, 0};
  std::optional<EigenvalueResult> result;
  std::optional<ErrorKind> error_kind;
  std::string error_message;

  bool ok() const noexcept { return result.has_value(); }
};

/// One eigenvalue per quantum-number set with the requested method. The ODE
/// method is only defined for vector Coulomb (Klein-Gordon oracle).
/// Output order follows `states` regardless of scheduling.
std::vector<SolveOutcome> solve_spectrum(const PotentialSpec& spec,
                                         std::span<const QuantumNumbers> states, Method method,
                                         const QuantizeOptions& opt = {}, int threads = 0);
std::vector<SolveOutcome> solve_spectrum_serial(const PotentialSpec& spec,
                                                std::span<const QuantumNumbers> states,
                                                Method method, const QuantizeOptions& opt = {});

/// R~(r) at every radius.
std::vector<double> sample_wavefunction(const WkbWavefunction& wf, std::span<const double> radii,
                                        int threads = 0);
std::vector<double> sample_wavefunction_serial(const WkbWavefunction& wf,
                                               std::span<const double> radii);

/// Single solve used by both batch versions.
SolveOutcome solve_one(const PotentialSpec& spec, const QuantumNumbers& qn, Method method,
                       const QuantizeOptions& opt);

/// (n_r, l) for n_r in [0, nr_max], l in [0, l_max], sorted by n_r then l.
std::vector<QuantumNumbers> state_grid(int nr_max, int l_max);

}  // namespace semiwkb
