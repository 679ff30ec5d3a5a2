// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wiretap {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

// Inner product with the conjugate on the first argument: x^H y.
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);

enum class ScenarioErrorKind {
  empty_channel,
  dimension_mismatch,
  non_finite,
  negative_radius,
  nonpositive_power,
  zero_channel,
};

class ScenarioError : public std::invalid_argument {
 public:
  ScenarioError(ScenarioErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  ScenarioErrorKind kind() const noexcept { return kind_; }

 private:
  ScenarioErrorKind kind_;
};

// Estimated channels, uncertainty radii and the linear power budget.
// The true channels are only known to lie in the closed balls
// ||h_r - hbar_r|| <= eps_r and ||h_e - hbar_e|| <= eps_e.
struct WiretapScenario {
  ComplexVec hbar_r;
  ComplexVec hbar_e;
  double eps_r = 0.0;
  double eps_e = 0.0;
  double power = 1.0;

  std::size_t antennas() const noexcept { return hbar_r.size(); }
};

struct ScenarioStatus {
  // ||hbar_r|| <= eps_r: the legitimate ball contains the zero channel, so
  // no positive worst-case rate exists. Flagged, not rejected.
  bool legit_ball_contains_origin = false;
};

// Throws ScenarioError when an invariant is violated.
ScenarioStatus validate_scenario(const WiretapScenario& s);

// Real parameters the whole problem reduces to:
//   a = P||hbar_e||^2, b = P||hbar_r||^2, c = eps_r/||hbar_r||,
//   d = eps_e/||hbar_e||, r = |hbar_e^H hbar_r| / (||hbar_r|| ||hbar_e||),
//   z0 = max(c, sqrt(1 - r^2)).
struct ScalarParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double r = 0.0;
  double z0 = 0.0;

  // sqrt(1 - r^2), the sine of the angle between the estimated channels.
  double r_perp() const noexcept;
};

// Assumes a validated scenario. r is clamped to [0, 1].
ScalarParams derive_params(const WiretapScenario& s);

double db_to_linear(double p_db);

}  // namespace wiretap
