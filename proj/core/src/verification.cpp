// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#include "wiretap/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "wiretap/inner.hpp"
#include "wiretap/solver.hpp"

namespace wiretap {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double rate_at(std::span<const Complex> u, std::span<const Complex> h_r,
               std::span<const Complex> h_e, double power) {
  const double gr = std::norm(inner(u, h_r));
  const double ge = std::norm(inner(u, h_e));
  return std::log2((1.0 + power * gr) / (1.0 + power * ge));
}

// g on the reduced domain, written out separately from the solver's copy.
double reduced_ratio(double z, const ScalarParams& p) {
  const double zc = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double sr = std::sqrt(std::max(0.0, 1.0 - p.r * p.r));
  const double num = 1.0 + p.b * (z - p.c) * (z - p.c);
  const double proj_e = p.r * z - sr * zc + p.d;
  return num / (1.0 + p.a * proj_e * proj_e);
}

}  // namespace

GridResult grid_oracle(const ScalarParams& p, std::size_t n_grid) {
  if (n_grid < 2) throw std::invalid_argument("grid_oracle: need at least two grid points");
  if (p.z0 > 1.0) throw std::domain_error("grid_oracle: empty domain (z0 > 1)");

  GridResult best{p.z0, -std::numeric_limits<double>::infinity()};
  double best_g = -1.0;
  const double span = 1.0 - p.z0;
  for (std::size_t i = 0; i < n_grid; ++i) {
    const double z = i + 1 == n_grid ? 1.0 : p.z0 + span * static_cast<double>(i) / static_cast<double>(n_grid - 1);
    const double g = reduced_ratio(z, p);
    if (g > best_g) {
      best_g = g;
      best.z = z;
    }
  }
  best.rate_bits = std::log2(best_g);
  return best;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

ComplexVec sample_ball(std::span<const Complex> center, double radius, std::mt19937_64& rng) {
  ComplexVec h(center.begin(), center.end());
  if (radius == 0.0) return h;

  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif;
  ComplexVec dir(center.size());
  double len = 0.0;
  do {
    for (auto& v : dir) v = Complex{gauss(rng), gauss(rng)};
    len = norm(dir);
  } while (len == 0.0);

  // 2n real dimensions.
  const double rho = radius * std::pow(unif(rng), 1.0 / (2.0 * static_cast<double>(center.size())));
  for (std::size_t i = 0; i < h.size(); ++i) h[i] += (rho / len) * dir[i];
  return h;
}

double monte_carlo_worst_case(const WiretapScenario& s, std::span<const Complex> u,
                              std::size_t n_samples, std::uint64_t seed,
                              bool include_worst_channels) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_samples; ++i) {
    auto rng = sample_rng(seed, i);
    const ComplexVec h_r = sample_ball(s.hbar_r, s.eps_r, rng);
    const ComplexVec h_e = sample_ball(s.hbar_e, s.eps_e, rng);
    worst = std::min(worst, rate_at(u, h_r, h_e, s.power));
  }

  if (include_worst_channels) {
    const ComplexVec h_e = worst_eaves_channel(u, s.hbar_e, s.eps_e).worst_channel;
    ComplexVec h_r;
    if (std::abs(inner(u, s.hbar_r)) > s.eps_r) {
      h_r = worst_legit_channel(u, s.hbar_r, s.eps_r).worst_channel;
    } else {
      // The ball reaches a channel with zero projection on u.
      const Complex proj = inner(u, s.hbar_r);
      h_r.assign(s.hbar_r.begin(), s.hbar_r.end());
      for (std::size_t i = 0; i < h_r.size(); ++i) h_r[i] -= proj * u[i];
    }
    worst = std::min(worst, rate_at(u, h_r, h_e, s.power));
  }
  return worst;
}

double lemma1_bruteforce(std::span<const Complex> a_vec, std::span<const Complex> b_vec, double q,
                         std::size_t n, std::uint64_t seed) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("lemma1_bruteforce: q outside [0, 1]");
  if (n < 4) throw std::invalid_argument("lemma1_bruteforce: need at least 4 points");
  const std::size_t dim = a_vec.size();
  const Complex ab = inner(a_vec, b_vec);
  const double r = std::abs(ab);
  if (r >= 1.0) throw std::invalid_argument("lemma1_bruteforce: parallel inputs (r >= 1)");
  const double sr = std::sqrt(1.0 - r * r);

  // Orthonormal frame e1 = a, e2 = normalized part of b orthogonal to a,
  // e3 orthogonal to both (needs dim >= 3). Up to a global phase any
  // feasible u is sqrt(q) e1 + rho e^{i beta} e2 + sqrt(1 - q - rho^2) e3.
  ComplexVec e2(b_vec.begin(), b_vec.end());
  for (std::size_t i = 0; i < dim; ++i) e2[i] = (e2[i] - ab * a_vec[i]) / sr;
  ComplexVec e3;
  if (dim >= 3) {
    double best = -1.0;
    for (std::size_t k = 0; k < dim; ++k) {
      ComplexVec v(dim, Complex{0.0, 0.0});
      v[k] = 1.0;
      for (std::span<const Complex> w : {a_vec, std::span<const Complex>(e2)}) {
        const Complex c = inner(w, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= c * w[i];
      }
      const double nv = norm(v);
      if (nv > best) {
        best = nv;
        e3 = v;
      }
    }
    for (auto& v : e3) v /= best;
  }

  const double sq = std::sqrt(q);
  const double rho_max = std::sqrt(std::max(0.0, 1.0 - q));
  const bool free_rho = !e3.empty();
  const Complex b_on_e1 = std::conj(ab);

  auto objective = [&](double rho, double beta) {
    return std::norm(b_on_e1 * sq + sr * rho * std::polar(1.0, beta));
  };

  std::mt19937_64 rng = sample_rng(seed, 0);
  std::uniform_real_distribution<double> unif;
  const double jitter_rho = unif(rng);
  const double jitter_beta = unif(rng);

  const std::size_t n_rho = free_rho ? static_cast<std::size_t>(std::sqrt(static_cast<double>(n))) : 1;
  const std::size_t n_beta = n / n_rho;
  const double d_rho = free_rho ? rho_max / static_cast<double>(n_rho) : 0.0;
  const double d_beta = 2.0 * std::numbers::pi / static_cast<double>(n_beta);

  double best_rho = rho_max, best_beta = 0.0;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_rho; ++i) {
    const double rho = free_rho ? std::min(rho_max, (static_cast<double>(i) + jitter_rho) * d_rho) : rho_max;
    for (std::size_t j = 0; j < n_beta; ++j) {
      const double beta = (static_cast<double>(j) + jitter_beta) * d_beta;
      const double v = objective(rho, beta);
      if (v < best_val) {
        best_val = v;
        best_rho = rho;
        best_beta = beta;
      }
    }
  }

  // Zoom around the best cell.
  double w_rho = d_rho, w_beta = d_beta;
  for (int level = 0; level < 6; ++level) {
    const double c_rho = best_rho, c_beta = best_beta;
    for (int i = -10; i <= 10; ++i) {
      const double rho = free_rho ? std::clamp(c_rho + w_rho * i / 10.0, 0.0, rho_max) : rho_max;
      for (int j = -10; j <= 10; ++j) {
        const double beta = c_beta + w_beta * j / 10.0;
        const double v = objective(rho, beta);
        if (v < best_val) {
          best_val = v;
          best_rho = rho;
          best_beta = beta;
        }
      }
    }
    w_rho /= 5.0;
    w_beta /= 5.0;
  }

  // Re-evaluate on the actual vectors rather than frame coordinates.
  const double rho3 = free_rho ? std::sqrt(std::max(0.0, 1.0 - q - best_rho * best_rho)) : 0.0;
  const Complex c2 = best_rho * std::polar(1.0, best_beta);
  ComplexVec u(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    u[i] = sq * a_vec[i] + c2 * e2[i];
    if (free_rho) u[i] += rho3 * e3[i];
  }
  const double q_hit = std::norm(inner(u, a_vec));
  if (std::abs(q_hit - q) > 1e-6) throw std::runtime_error("lemma1_bruteforce: constraint band missed");
  return std::norm(inner(u, b_vec));
}

double perfect_csi_oracle(const WiretapScenario& s) {
  if (s.eps_r != 0.0 || s.eps_e != 0.0)
    throw std::invalid_argument("perfect_csi_oracle: uncertainty radii must be zero");
  const double nr = norm(s.hbar_r);
  const double ne = norm(s.hbar_e);
  const double P = s.power;

  // Coordinates in the frame {hbar_r/||hbar_r||, orthogonal remainder}.
  const Complex along = inner(s.hbar_r, s.hbar_e) / nr;
  const double along2 = std::norm(along);
  const double perp2 = std::max(0.0, ne * ne - along2);

  const double a11 = 1.0 + P * nr * nr;  // A = diag(a11, 1)
  const double b11 = 1.0 + P * along2;
  const double b22 = 1.0 + P * perp2;
  const double det_b = 1.0 + P * ne * ne;

  // det(A - lambda B) = det_b lambda^2 - (a11 b22 + b11) lambda + a11
  const double tr = a11 * b22 + b11;
  const double disc = std::max(0.0, tr * tr - 4.0 * det_b * a11);
  const double lambda = (tr + std::sqrt(disc)) / (2.0 * det_b);
  return std::max(0.0, std::log2(lambda));
}

VerificationReport verify_scenario(const WiretapScenario& s, const VerificationOptions& opts,
                                   const VerificationTolerances& tol) {
  const SolverOutput sol = worst_case_secrecy_rate(s);
  const ScalarParams& p = sol.params;

  VerificationReport rep;
  rep.solver_rate_bits = sol.secrecy_rate_bits;
  rep.positive = sol.positive;
  rep.samples = opts.mc_samples;
  rep.seed = opts.seed;

  auto fail = [&rep](std::string why) {
    rep.passed = false;
    rep.notes.push_back("FAIL: " + std::move(why));
  };

  if (p.z0 <= 1.0) {
    GridResult grid;
    if (s.antennas() == 1) {
      grid = {1.0, std::log2(reduced_ratio(1.0, p))};
      rep.notes.push_back("single antenna: grid reduced to z = 1");
    } else {
      grid = grid_oracle(p, opts.grid_points);
    }
    rep.grid_rate_bits = grid.rate_bits;
    rep.grid_z = grid.z;
    if (sol.positive) {
      if (grid.rate_bits - sol.secrecy_rate_bits > tol.grid_below)
        fail("grid oracle beats the solver");
      if (sol.secrecy_rate_bits - grid.rate_bits >
          tol.grid_above_rel * std::max(1.0, sol.secrecy_rate_bits))
        fail("solver exceeds grid oracle beyond tolerance");
    } else if (grid.rate_bits > tol.nonpositive_grid) {
      fail("grid oracle finds a positive rate the solver missed");
    }
  } else {
    rep.notes.push_back("legitimate uncertainty ball contains the origin; grid skipped");
  }

  if (!sol.positive) {
    rep.notes.push_back(std::string("non-positive worst-case rate (branch ") +
                        to_string(sol.diagnostics.branch) + "); beam oracles skipped");
  } else {
    const ComplexVec& u = *sol.u_star;

    const double mc = monte_carlo_worst_case(s, u, opts.mc_samples, opts.seed, true);
    rep.mc_min_rate_bits = mc;
    if (std::abs(mc - sol.secrecy_rate_bits) > tol.monte_carlo)
      fail("sampled worst case disagrees with the closed form");

    const ComplexVec h_r = worst_legit_channel(u, s.hbar_r, s.eps_r).worst_channel;
    const ComplexVec h_e = worst_eaves_channel(u, s.hbar_e, s.eps_e).worst_channel;
    rep.attainment_gap = sol.secrecy_rate_bits - rate_at(u, h_r, h_e, s.power);
    if (std::abs(*rep.attainment_gap) > tol.attainment) fail("attainment gap too large");

    const double s2 = 1.0 - p.r * p.r;
    if (s.antennas() >= 2 && p.r > 1e-12 && s2 > 1e-12) {
      ComplexVec a_hat(s.hbar_r), b_hat(s.hbar_e);
      const double nr = norm(s.hbar_r), ne = norm(s.hbar_e);
      for (auto& v : a_hat) v /= nr;
      for (auto& v : b_hat) v /= ne;
      const double zs = *sol.z_star;
      const double q_mid = 0.5 * (std::max(s2, zs * zs) + 1.0);
      double worst = 0.0;
      for (double q : {zs * zs, q_mid, 1.0}) {
        const Lemma1Solution ls = lemma1_solve(a_hat, b_hat, q);
        const double brute = lemma1_bruteforce(a_hat, b_hat, q, opts.lemma1_points, opts.seed);
        worst = std::max(worst, std::abs(brute - ls.value));
        if (ls.u) {
          const double res_q = std::abs(std::norm(inner(*ls.u, a_hat)) - q);
          const double res_n = std::abs(norm(*ls.u) - 1.0);
          if (std::max(res_q, res_n) > tol.lemma1_constraint) fail("lemma 1 constraint residual");
        }
      }
      rep.lemma1_max_violation = worst;
      if (worst > tol.lemma1) fail("lemma 1 closed form disagrees with brute force");
    } else {
      rep.notes.push_back("degenerate channel geometry; lemma 1 check skipped");
    }
  }

  if (s.eps_r == 0.0 && s.eps_e == 0.0) {
    rep.perfect_csi_rate_bits = perfect_csi_oracle(s);
    if (std::abs(*rep.perfect_csi_rate_bits - sol.secrecy_rate_bits) > tol.perfect_csi)
      fail("perfect-CSI oracle disagrees");
  }
  return rep;
}

}  // namespace wiretap
