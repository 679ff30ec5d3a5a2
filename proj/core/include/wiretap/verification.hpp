// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------
//
// Independent checks of the closed-form solver. None of these routines call
// into the solver's root-finding path; they re-derive the quantities they
// compare against from first principles (dense search, sampling, the 2 x 2
// perfect-CSI pencil).

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wiretap/scenario.hpp"

namespace wiretap {

struct GridResult {
  double z = 0.0;
  double rate_bits = 0.0;  // log2 of the largest sampled g; may be negative
};

// Uniform grid of n_grid points over [z0, 1]. Throws std::invalid_argument
// when n_grid < 2 and std::domain_error when z0 > 1.
GridResult grid_oracle(const ScalarParams& p, std::size_t n_grid);

// Deterministic per-sample generator: the stream for sample `index` depends
// only on (seed, index).
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

// Uniform point in the complex ball ||h - center|| <= radius.
ComplexVec sample_ball(std::span<const Complex> center, double radius, std::mt19937_64& rng);

// Smallest sampled secrecy rate of the beam u over the uncertainty balls.
// With include_worst_channels the closed-form worst pair is added as an
// extra deterministic sample.
double monte_carlo_worst_case(const WiretapScenario& s, std::span<const Complex> u,
                              std::size_t n_samples, std::uint64_t seed,
                              bool include_worst_channels = true);

// Dense search of min |u^H b|^2 over unit u with |u^H a|^2 = q. Roughly n
// objective evaluations, followed by local zoom refinement. The seed
// jitters the grid offset.
double lemma1_bruteforce(std::span<const Complex> a_vec, std::span<const Complex> b_vec, double q,
                         std::size_t n, std::uint64_t seed);

// Perfect-CSI secrecy capacity in bits: log2 of the largest generalized
// eigenvalue of (I + P h_r h_r^H, I + P h_e h_e^H), clamped at 0. Requires
// eps_r = eps_e = 0 (throws std::invalid_argument otherwise).
double perfect_csi_oracle(const WiretapScenario& s);

struct VerificationOptions {
  std::size_t grid_points = 100000;
  std::size_t mc_samples = 10000;
  std::size_t lemma1_points = 1000000;
  std::uint64_t seed = 1;
};

struct VerificationTolerances {
  double grid_below = 1e-8;         // grid may not beat the solver by more
  double grid_above_rel = 1e-6;     // solver above grid, relative
  double attainment = 1e-9;
  double monte_carlo = 1e-9;
  double lemma1 = 1e-3;
  double lemma1_constraint = 1e-10;
  double perfect_csi = 1e-6;
  double nonpositive_grid = 1e-9;   // grid rate allowed when solver reports 0
};

struct VerificationReport {
  double solver_rate_bits = 0.0;
  bool positive = false;
  std::optional<double> grid_rate_bits;
  std::optional<double> grid_z;
  std::optional<double> mc_min_rate_bits;
  std::optional<double> attainment_gap;
  std::optional<double> lemma1_max_violation;
  std::optional<double> perfect_csi_rate_bits;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool passed = true;
  std::vector<std::string> notes;
};

// Runs every applicable oracle against worst_case_secrecy_rate(s).
VerificationReport verify_scenario(const WiretapScenario& s, const VerificationOptions& opts = {},
                                   const VerificationTolerances& tol = {});

}  // namespace wiretap
