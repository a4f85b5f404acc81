// Parallel vs serial kernels. Arg(1) is the OpenMP path, Arg(0) the serial reference.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "synge/bessel_oracle.hpp"
#include "synge/certify.hpp"
#include "synge/shock.hpp"

using namespace synge;

namespace {

void BM_CertifyGrid(benchmark::State& state) {
  const std::vector<double> x = GridSpec{}.build();
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto v = evaluate_points(x, [](double g) { return p_epp(GasKind::diatomic, g); }, parallel);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(x.size()));
}
BENCHMARK(BM_CertifyGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OracleSweep(benchmark::State& state) {
  std::vector<double> x(200);
  for (int k = 0; k < 200; ++k) x[k] = 1e-3 * std::pow(3e5, k / 199.0);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto v = oracle_sweep(x, parallel);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * 200 * 5);
}
BENCHMARK(BM_OracleSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ShockScan(benchmark::State& state) {
  SimParams p;
  p.gas = GasKind::monatomic;
  const BlowupResult blow = find_blowup_sbar({-1.0 / std::sqrt(2.0), 3.0, 1.0}, p);
  std::vector<double> s;
  const double a = std::sqrt(3.0) * (1.0 + 1e-9), b = blow.s_bar * (1.0 - 1e-9);
  for (int k = 0; k < 640; ++k) s.push_back(a + (b - a) * k / 639.0);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    auto v = scan_downstream_velocity(blow.segment, s, p.gas, parallel);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(s.size()));
}
BENCHMARK(BM_ShockScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
