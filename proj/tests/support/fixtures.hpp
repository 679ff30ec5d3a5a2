// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------
//
// Shared scenarios and random generators for the test suites.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "wiretap/scenario.hpp"

namespace wiretap::testing {

// Printed channels of the two worked examples: 4 antennas, 5 dB.
inline WiretapScenario example1() {
  WiretapScenario s;
  s.hbar_r = {{-1.0301, 0.3060}, {-0.0162, 0.5618}, {0.7134, -0.1504}, {1.0488, 0.1086}};
  s.hbar_e = {{-0.3475, -0.0816}, {0.3662, -0.1442}, {0.2450, -0.4282}, {0.2369, 0.2346}};
  s.eps_r = 1e-2;
  s.eps_e = 1e-2;
  s.power = db_to_linear(5.0);
  return s;
}

inline WiretapScenario example2() {
  WiretapScenario s;
  s.hbar_r = {{0.1216, 0.0118}, {0.0106, -0.0316}, {-0.0856, -0.1063}, {0.2241, -0.0216}};
  s.hbar_e = {{0.3599, 0.0174}, {0.1655, -0.1923}, {-0.2323, -0.4065}, {0.7313, -0.2272}};
  s.eps_r = 0.05;
  s.eps_e = 0.05;
  s.power = db_to_linear(5.0);
  return s;
}

inline ComplexVec complex_gaussian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  ComplexVec v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

inline ComplexVec random_unit(std::size_t n, std::mt19937_64& rng) {
  ComplexVec v = complex_gaussian(n, rng);
  const double nv = norm(v);
  for (auto& x : v) x /= nv;
  return v;
}

struct RandomScenarioOptions {
  double max_rel_eps = 0.3;  // eps as a fraction of the channel norm
  double min_power_db = -10.0;
  double max_power_db = 30.0;
};

// Channels CN(0, I), radii uniform up to max_rel_eps of each channel norm,
// power uniform in dB.
inline WiretapScenario random_scenario(std::size_t n, std::mt19937_64& rng,
                                       const RandomScenarioOptions& o = {}) {
  std::uniform_real_distribution<double> u01;
  WiretapScenario s;
  s.hbar_r = complex_gaussian(n, rng);
  s.hbar_e = complex_gaussian(n, rng);
  s.eps_r = o.max_rel_eps * u01(rng) * norm(s.hbar_r);
  s.eps_e = o.max_rel_eps * u01(rng) * norm(s.hbar_e);
  s.power = db_to_linear(o.min_power_db + (o.max_power_db - o.min_power_db) * u01(rng));
  return s;
}

// Haar-ish unitary from Gram-Schmidt on Gaussian columns, row-major.
inline std::vector<Complex> random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::vector<ComplexVec> cols;
  for (std::size_t k = 0; k < n; ++k) {
    ComplexVec v = complex_gaussian(n, rng);
    for (const auto& c : cols) {
      const Complex proj = inner(c, v);
      for (std::size_t i = 0; i < n; ++i) v[i] -= proj * c[i];
    }
    const double nv = norm(v);
    for (auto& x : v) x /= nv;
    cols.push_back(std::move(v));
  }
  std::vector<Complex> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = cols[j][i];
  return m;
}

inline ComplexVec apply(const std::vector<Complex>& m, const ComplexVec& v) {
  const std::size_t n = v.size();
  ComplexVec out(n, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += m[i * n + j] * v[j];
  return out;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// Smallest distance between u and e^{i w} v over the phase w.
inline double phase_distance(const ComplexVec& u, const ComplexVec& v) {
  const Complex c = inner(v, u);
  const Complex phase = std::abs(c) > 0.0 ? c / std::abs(c) : Complex{1.0, 0.0};
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) worst = std::max(worst, std::abs(u[i] - phase * v[i]));
  return worst;
}

}  // namespace wiretap::testing
