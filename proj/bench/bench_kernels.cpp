// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "semiwkb/batch.hpp"
#include "semiwkb/closed.hpp"
#include "semiwkb/quantize.hpp"
#include "semiwkb/wavefn.hpp"

namespace {

using namespace semiwkb;

const PotentialSpec kCoulomb = PotentialSpec::coulomb(Coupling::Vector, 1.0, 0.3);
const PotentialSpec kLinear = PotentialSpec::linear(Coupling::Scalar, 0.0, 0.14, true);

void BM_SpectrumSerial(benchmark::State& state, const PotentialSpec& spec, Method method) {
  const auto states = state_grid(5, 5);
  for (auto _ : state) {
    auto out = solve_spectrum_serial(spec, states, method);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(states.size()));
}

void BM_SpectrumParallel(benchmark::State& state, const PotentialSpec& spec, Method method) {
  const auto states = state_grid(5, 5);
  for (auto _ : state) {
    auto out = solve_spectrum(spec, states, method, {}, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(states.size()));
}

std::vector<double> radii_for(const WkbWavefunction& wf, int n) {
  std::vector<double> r;
  for (int k = 1; k <= n; ++k) r.push_back(1.5 * wf.r_out() * k / n);
  return r;
}

void BM_WavefunctionSerial(benchmark::State& state) {
  const QuantumNumbers qn(3, 1);
  const auto e = closed_form_eigenvalue(qn, kCoulomb).energy;
  const WkbWavefunction wf(kCoulomb, qn, e);
  const auto r = radii_for(wf, 2000);
  for (auto _ : state) {
    auto v = sample_wavefunction_serial(wf, r);
    benchmark::DoNotOptimize(v.data());
  }
}

void BM_WavefunctionParallel(benchmark::State& state) {
  const QuantumNumbers qn(3, 1);
  const auto e = closed_form_eigenvalue(qn, kCoulomb).energy;
  const WkbWavefunction wf(kCoulomb, qn, e);
  const auto r = radii_for(wf, 2000);
  for (auto _ : state) {
    auto v = sample_wavefunction(wf, r, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(v.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_SpectrumSerial, coulomb_wkb, kCoulomb, Method::NumericWkb)
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_SpectrumParallel, coulomb_wkb, kCoulomb, Method::NumericWkb)
    ->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_SpectrumSerial, linear_wkb, kLinear, Method::NumericWkb)
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_SpectrumParallel, linear_wkb, kLinear, Method::NumericWkb)
    ->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_SpectrumSerial, coulomb_ode, kCoulomb, Method::OdeOracle)
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_SpectrumParallel, coulomb_ode, kCoulomb, Method::OdeOracle)
    ->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WavefunctionSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WavefunctionParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
