// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------
//
// Explicit maximization of the worst-case secrecy rate
//
//   max_{Q >= 0, tr Q <= P} min_{h_r, h_e} log2 (1 + h_r^H Q h_r) / (1 + h_e^H Q h_e)
//
// over spherical uncertainty balls. The optimum is a rank-one beam
// Q = P u u^H; the beam is parametrized by z = |u^H hbar_r| / ||hbar_r||, and
// the 1-D objective
//
//   g(z) = (1 + b (z - c)^2) / (1 + a (r z - sqrt(1-r^2) sqrt(1-z^2) + d)^2)
//
// is maximized over [z0, 1]. Under z = 2x/(1+x^2) the stationary points of g
// are the real roots in range of a degree-6 polynomial, found as companion
// matrix eigenvalues.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "wiretap/polyroots.hpp"
#include "wiretap/scenario.hpp"

namespace wiretap {

enum class PositivityBranch { cond1, cond2, neither };

const char* to_string(PositivityBranch b) noexcept;

struct PositivityDiagnostics {
  PositivityBranch branch = PositivityBranch::neither;
  // sqrt(1-r^2) z0 + (r - sqrt(b/a)) sqrt(1-z0^2); its sign picks the branch.
  double expr_sign = 0.0;
  // lhs - rhs of whichever strict inequality governs the branch.
  double expr_margin = 0.0;
};

// Decides whether any beam achieves a positive worst-case rate. Depends on
// the power only through b/a, so the answer is power-independent.
PositivityDiagnostics positivity_check(const ScalarParams& p);

// Throws std::domain_error for z outside [z0, 1] (1e-12 slack).
double objective_g(double z, const ScalarParams& p);

// F(x) = (p0 x^4 + p1 x^3 + p2 x^2 + p1 x + p0) / (q0 x^4 + q1 x^3 + q2 x^2 + q3 x + q4)
// equals g(2x/(1+x^2)) on [0, 1].
struct RationalCoefficients {
  std::array<double, 3> p{};
  std::array<double, 5> q{};
};

RationalCoefficients rational_coefficients(const ScalarParams& p);

// a_0..a_6 of the stationarity polynomial; may be identically zero when F is
// constant (a = b = 0).
std::array<double, 7> stationarity_coefficients(const RationalCoefficients& pq);

// Throws std::invalid_argument if every coefficient vanishes.
RealPolynomial stationarity_polynomial(const RationalCoefficients& pq);

struct Candidate {
  double x = 0.0;
  double z = 0.0;
  double g = 0.0;
};

struct ZStar {
  double z_star = 0.0;
  double x_star = 0.0;
  std::vector<Candidate> candidates;
};

// Maximizes g over [z0, 1] from the left endpoint plus the feasible
// stationary points. Requires z0 <= 1.
ZStar solve_z_star(const ScalarParams& p);

// Unit beam u with |u^H hbar_r| = ||hbar_r|| z_star and minimal |u^H hbar_e|.
// Orthogonal and parallel channel geometries use dedicated constructions.
ComplexVec beamformer(const WiretapScenario& s, const ScalarParams& p, double z_star);

// Row-major n x n Hermitian matrix.
struct CovarianceMatrix {
  std::size_t n = 0;
  std::vector<Complex> entries;

  Complex operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

struct SolverOutput {
  double secrecy_rate_bits = 0.0;
  bool positive = false;
  std::optional<double> z_star;
  std::optional<double> x_star;
  std::optional<ComplexVec> u_star;
  std::optional<CovarianceMatrix> q_star;
  std::vector<Candidate> candidates;
  PositivityDiagnostics diagnostics;
  ScalarParams params;
  bool legit_ball_contains_origin = false;
};

// Full pipeline. Only ScenarioError escapes; a zero rate is a normal result.
SolverOutput worst_case_secrecy_rate(const WiretapScenario& s);

// log2 of (1 + P |u^H h_r|^2) / (1 + P |u^H h_e|^2).
double secrecy_rate_bits(std::span<const Complex> u, std::span<const Complex> h_r,
                         std::span<const Complex> h_e, double power);

}  // namespace wiretap
