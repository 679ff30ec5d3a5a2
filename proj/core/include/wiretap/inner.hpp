// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#pragma once

#include <optional>
#include <span>

#include "wiretap/scenario.hpp"

namespace wiretap {

// Optimum of an inner channel subproblem for a fixed unit beam u.
struct InnerSolution {
  double value = 0.0;        // |u^H h|^2 at the optimizing channel
  ComplexVec worst_channel;  // optimizing h, on the sphere ||h - hbar|| = eps
};

// min over ||h - hbar_r|| <= eps_r of |u^H h|^2. Throws std::domain_error
// when |u^H hbar_r| <= eps_r, where the ball reaches a zero projection.
InnerSolution worst_legit_channel(std::span<const Complex> u, std::span<const Complex> hbar_r,
                                  double eps_r);

// max over ||h - hbar_e|| <= eps_e of |u^H h|^2. If u^H hbar_e = 0 the
// perturbation is taken along u itself.
InnerSolution worst_eaves_channel(std::span<const Complex> u, std::span<const Complex> hbar_e,
                                  double eps_e);

// Smallest |u^H hbar_e| over unit u with |u^H hbar_r| = ||hbar_r|| z:
//   ||hbar_e|| (r z - sqrt(1-r^2) sqrt(1-z^2))   if z >= sqrt(1-r^2),
//   0                                             otherwise.
double psi(double z, const ScalarParams& p, double hbar_e_norm);

struct Lemma1Solution {
  double value = 0.0;
  std::optional<ComplexVec> u;  // only for q > 1 - r^2
};

// min u^H b b^H u  subject to  u^H a a^H u = q, ||u|| = 1, for unit a, b
// with r = |b^H a| < 1 and 0 <= q <= 1. Throws std::invalid_argument on
// r >= 1 or q outside [0, 1].
//
// The zero value for q <= 1 - r^2 needs a direction orthogonal to both a and
// b, so it is attained only when n >= 3 (in C^2 only at q = 1 - r^2). The
// solver only queries q >= 1 - r^2.
Lemma1Solution lemma1_solve(std::span<const Complex> a_vec, std::span<const Complex> b_vec,
                            double q);

}  // namespace wiretap
