// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#include "wiretap/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace wiretap {

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double norm(std::span<const Complex> x) {
  // Scaled accumulation; channel entries can be tiny in the P -> 0 tests.
  double scale = 0.0;
  for (const auto& v : x) scale = std::max({scale, std::abs(v.real()), std::abs(v.imag())});
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& v : x) sum += std::norm(v / scale);
  return scale * std::sqrt(sum);
}

namespace {

bool all_finite(const ComplexVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

}  // namespace

ScenarioStatus validate_scenario(const WiretapScenario& s) {
  if (s.hbar_r.empty() || s.hbar_e.empty())
    throw ScenarioError(ScenarioErrorKind::empty_channel, "empty channel vector");
  if (s.hbar_r.size() != s.hbar_e.size())
    throw ScenarioError(ScenarioErrorKind::dimension_mismatch,
                        "dimension mismatch: hbar_r has " + std::to_string(s.hbar_r.size()) +
                            " entries, hbar_e has " + std::to_string(s.hbar_e.size()));
  if (!all_finite(s.hbar_r) || !all_finite(s.hbar_e) || !std::isfinite(s.eps_r) ||
      !std::isfinite(s.eps_e) || !std::isfinite(s.power))
    throw ScenarioError(ScenarioErrorKind::non_finite, "non-finite value in scenario");
  if (s.eps_r < 0.0 || s.eps_e < 0.0)
    throw ScenarioError(ScenarioErrorKind::negative_radius, "negative uncertainty radius");
  if (!(s.power > 0.0))
    throw ScenarioError(ScenarioErrorKind::nonpositive_power, "power must be positive");

  const double nr = norm(s.hbar_r);
  const double ne = norm(s.hbar_e);
  if (nr == 0.0 || ne == 0.0)
    throw ScenarioError(ScenarioErrorKind::zero_channel, "zero-norm estimated channel");

  return ScenarioStatus{.legit_ball_contains_origin = nr <= s.eps_r};
}

double ScalarParams::r_perp() const noexcept { return std::sqrt(std::max(0.0, 1.0 - r * r)); }

ScalarParams derive_params(const WiretapScenario& s) {
  const double nr = norm(s.hbar_r);
  const double ne = norm(s.hbar_e);

  ScalarParams p;
  p.a = s.power * ne * ne;
  p.b = s.power * nr * nr;
  p.c = s.eps_r / nr;
  p.d = s.eps_e / ne;
  // Cauchy-Schwarz can be overshot by a few ulps.
  p.r = std::clamp(std::abs(inner(s.hbar_e, s.hbar_r)) / (nr * ne), 0.0, 1.0);
  p.z0 = std::max(p.c, p.r_perp());
  return p;
}

double db_to_linear(double p_db) { return std::pow(10.0, p_db / 10.0); }

}  // namespace wiretap
