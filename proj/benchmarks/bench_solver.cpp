// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include <random>

#include "wiretap/polyroots.hpp"
#include "wiretap/solver.hpp"
#include "wiretap/verification.hpp"

namespace {

wiretap::WiretapScenario random_scenario(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  wiretap::WiretapScenario s;
  s.hbar_r.resize(n);
  s.hbar_e.resize(n);
  for (auto& v : s.hbar_r) v = {gauss(rng), gauss(rng)};
  for (auto& v : s.hbar_e) v = {gauss(rng), gauss(rng)};
  s.eps_r = 0.05;
  s.eps_e = 0.05;
  s.power = 10.0;
  return s;
}

// The closed-form solve should be flat in the antenna count apart from the
// O(n) vector work.
void BM_WorstCaseSecrecyRate(benchmark::State& state) {
  const auto s = random_scenario(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto out = wiretap::worst_case_secrecy_rate(s);
    benchmark::DoNotOptimize(out.secrecy_rate_bits);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WorstCaseSecrecyRate)->RangeMultiplier(2)->Range(2, 256)->Complexity();

void BM_SolveZStar(benchmark::State& state) {
  const auto p = wiretap::derive_params(random_scenario(4, 11));
  for (auto _ : state) benchmark::DoNotOptimize(wiretap::solve_z_star(p).z_star);
}
BENCHMARK(BM_SolveZStar);

void BM_CompanionRoots(benchmark::State& state) {
  const wiretap::RealPolynomial p({1.0, -2.0, 3.5, -1.0, 0.25, 4.0, -0.5});
  for (auto _ : state) benchmark::DoNotOptimize(wiretap::roots(p).roots.data());
}
BENCHMARK(BM_CompanionRoots);

void BM_GridOracle(benchmark::State& state) {
  const auto p = wiretap::derive_params(random_scenario(4, 11));
  for (auto _ : state)
    benchmark::DoNotOptimize(wiretap::grid_oracle(p, static_cast<std::size_t>(state.range(0))).z);
}
BENCHMARK(BM_GridOracle)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
