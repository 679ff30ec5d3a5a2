// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#include "wiretap/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wiretap {

namespace {

constexpr double kDegenerate = 1e-12;
constexpr double kDomainSlack = 1e-12;

double sqrt_clamped(double v) { return std::sqrt(std::max(0.0, v)); }

// Unit vector orthogonal to every vector in `avoid` (each assumed unit norm
// and mutually orthogonal). Falls back to orthogonality with the first one
// only when the dimension is too small.
ComplexVec orthogonal_unit(std::size_t n, std::initializer_list<std::span<const Complex>> avoid) {
  ComplexVec best;
  double best_norm = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    ComplexVec v(n, Complex{0.0, 0.0});
    v[k] = 1.0;
    for (auto w : avoid) {
      const Complex c = inner(w, v);
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * w[i];
    }
    const double nv = norm(v);
    if (nv > best_norm) {
      best_norm = nv;
      best = std::move(v);
    }
  }
  if (best_norm <= 1e-8) return {};
  for (auto& v : best) v /= best_norm;
  return best;
}

ComplexVec normalized(std::span<const Complex> v) {
  const double nv = norm(v);
  ComplexVec out(v.begin(), v.end());
  for (auto& x : out) x /= nv;
  return out;
}

// z a_hat + sqrt(1-z^2) n with n orthogonal to a_hat (and to e_hat when the
// dimension allows it).
ComplexVec split_beam(const ComplexVec& a_hat, const ComplexVec& e_hat, double z, bool avoid_e) {
  const std::size_t n = a_hat.size();
  const double zc = sqrt_clamped(1.0 - z * z);
  ComplexVec u(a_hat);
  for (auto& v : u) v *= z;
  if (zc == 0.0 || n == 1) return u;

  ComplexVec perp;
  if (avoid_e) perp = orthogonal_unit(n, {a_hat, e_hat});
  if (perp.empty()) perp = orthogonal_unit(n, {a_hat});
  for (std::size_t i = 0; i < n; ++i) u[i] += zc * perp[i];
  return u;
}

}  // namespace

const char* to_string(PositivityBranch b) noexcept {
  switch (b) {
    case PositivityBranch::cond1:
      return "cond1";
    case PositivityBranch::cond2:
      return "cond2";
    case PositivityBranch::neither:
      return "neither";
  }
  return "neither";
}

PositivityDiagnostics positivity_check(const ScalarParams& p) {
  PositivityDiagnostics diag;
  const double s = p.r_perp();
  const double z0c = sqrt_clamped(1.0 - p.z0 * p.z0);

  if (p.a == 0.0) {
    // No eavesdropper term: g(1) = 1 + b (1 - c)^2 is the best value.
    diag.expr_sign = 1.0;
    diag.expr_margin = p.b * (1.0 - p.c) * (1.0 - p.c);
    diag.branch = (p.b > 0.0 && p.c < 1.0) ? PositivityBranch::cond1 : PositivityBranch::neither;
    return diag;
  }

  const double k = std::sqrt(p.b / p.a);
  const double rhs = p.c * k + p.d;
  diag.expr_sign = s * p.z0 + (p.r - k) * z0c;

  if (diag.expr_sign >= 0.0) {
    // The auxiliary function peaks at the left endpoint z0.
    diag.expr_margin = s * z0c - (p.r - k) * p.z0 - rhs;
    diag.branch = diag.expr_margin > 0.0 ? PositivityBranch::cond1 : PositivityBranch::neither;
  } else {
    // Interior peak, value sqrt(1 - r^2 + (k - r)^2).
    diag.expr_margin = std::sqrt(1.0 - p.r * p.r + (k - p.r) * (k - p.r)) - rhs;
    diag.branch = diag.expr_margin > 0.0 ? PositivityBranch::cond2 : PositivityBranch::neither;
  }
  if (p.c >= 1.0) diag.branch = PositivityBranch::neither;
  return diag;
}

double objective_g(double z, const ScalarParams& p) {
  if (!(z >= p.z0 - kDomainSlack && z <= 1.0 + kDomainSlack))
    throw std::domain_error("objective_g: z outside [z0, 1]");
  z = std::clamp(z, std::min(p.z0, 1.0), 1.0);
  const double legit = z - p.c;
  const double eaves = p.r * z - p.r_perp() * sqrt_clamped(1.0 - z * z) + p.d;
  return (1.0 + p.b * legit * legit) / (1.0 + p.a * eaves * eaves);
}

RationalCoefficients rational_coefficients(const ScalarParams& p) {
  const double a = p.a, b = p.b, c = p.c, d = p.d, r = p.r;
  const double s = p.r_perp();
  RationalCoefficients pq;
  pq.p = {1.0 + b * c * c, -4.0 * b * c, 4.0 * b + 2.0 * b * c * c + 2.0};
  pq.q = {1.0 + a * (s + d) * (s + d),
          4.0 * a * r * (s + d),
          2.0 - 2.0 * a + 6.0 * a * r * r + 2.0 * a * d * d,
          4.0 * a * r * (-s + d),
          1.0 + a * (-s + d) * (-s + d)};
  return pq;
}

std::array<double, 7> stationarity_coefficients(const RationalCoefficients& pq) {
  const auto [p0, p1, p2] = pq.p;
  const auto [q0, q1, q2, q3, q4] = pq.q;
  return {
      p1 * q0 - p0 * q1,
      2.0 * p2 * q0 - 2.0 * p0 * q2,
      3.0 * p1 * q0 + p2 * q1 - p1 * q2 - 3.0 * p0 * q3,
      4.0 * p0 * q0 + 2.0 * p1 * q1 - 2.0 * p1 * q3 - 4.0 * q4 * p0,
      3.0 * p0 * q1 + p1 * q2 - p2 * q3 - 3.0 * q4 * p1,
      2.0 * p0 * q2 - 2.0 * q4 * p2,
      p0 * q3 - q4 * p1,
  };
}

RealPolynomial stationarity_polynomial(const RationalCoefficients& pq) {
  const auto c = stationarity_coefficients(pq);
  return RealPolynomial(std::vector<double>(c.begin(), c.end()));
}

ZStar solve_z_star(const ScalarParams& p) {
  if (!(p.z0 <= 1.0)) throw std::domain_error("solve_z_star: empty domain (z0 > 1)");

  // (1 - sqrt(1 - z0^2)) / z0 without the 0/0 at z0 = 0.
  const double x_lo = p.z0 / (1.0 + sqrt_clamped(1.0 - p.z0 * p.z0));

  auto make = [&p](double x) {
    const double z = std::clamp(2.0 * x / (1.0 + x * x), p.z0, 1.0);
    return Candidate{x, z, objective_g(z, p)};
  };

  ZStar out;
  out.candidates.push_back(make(x_lo));

  const auto coeffs = stationarity_coefficients(rational_coefficients(p));
  const bool constant = std::all_of(coeffs.begin(), coeffs.end(), [](double v) { return v == 0.0; });
  std::vector<double> feasible;
  if (!constant && x_lo < 1.0) {
    const RealPolynomial poly(std::vector<double>(coeffs.begin(), coeffs.end()));
    feasible = filter_feasible(roots(poly), x_lo, 1.0);
  }
  for (double x : feasible) out.candidates.push_back(make(x));
  if (feasible.empty() && x_lo < 1.0) out.candidates.push_back(make(1.0));

  const Candidate* best = &out.candidates.front();
  for (const auto& cand : out.candidates) {
    if (cand.g > best->g || (cand.g == best->g && cand.x < best->x)) best = &cand;
  }
  out.x_star = best->x;
  out.z_star = best->z;
  return out;
}

ComplexVec beamformer(const WiretapScenario& s, const ScalarParams& p, double z_star) {
  const double nr = norm(s.hbar_r);
  const double ne = norm(s.hbar_e);
  const ComplexVec a_hat = normalized(s.hbar_r);
  const ComplexVec e_hat = normalized(s.hbar_e);

  if (s.antennas() == 1) return a_hat;

  const double s2 = 1.0 - p.r * p.r;
  if (s2 < kDegenerate) return split_beam(a_hat, e_hat, z_star, /*avoid_e=*/false);
  if (p.r < kDegenerate) {
    // Orthogonal estimates: keep the remainder off the eavesdropper too.
    ComplexVec e_perp = e_hat;
    const Complex c = inner(a_hat, e_perp);
    for (std::size_t i = 0; i < e_perp.size(); ++i) e_perp[i] -= c * a_hat[i];
    return split_beam(a_hat, normalized(e_perp), z_star, /*avoid_e=*/true);
  }

  const double t = sqrt_clamped((1.0 - z_star * z_star) / s2);
  const Complex coupling = inner(s.hbar_r, s.hbar_e) / (nr * nr * ne);
  const Complex coef_r = -(t + z_star / p.r) * coupling;

  ComplexVec u(s.antennas());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = t * e_hat[i] + coef_r * s.hbar_r[i];
  // The closed form is unit norm up to rounding.
  return normalized(u);
}

double secrecy_rate_bits(std::span<const Complex> u, std::span<const Complex> h_r,
                         std::span<const Complex> h_e, double power) {
  const double gr = std::norm(inner(u, h_r));
  const double ge = std::norm(inner(u, h_e));
  return std::log2((1.0 + power * gr) / (1.0 + power * ge));
}

SolverOutput worst_case_secrecy_rate(const WiretapScenario& s) {
  const ScenarioStatus status = validate_scenario(s);

  SolverOutput out;
  out.params = derive_params(s);
  out.legit_ball_contains_origin = status.legit_ball_contains_origin;
  out.diagnostics = positivity_check(out.params);
  if (status.legit_ball_contains_origin || out.diagnostics.branch == PositivityBranch::neither)
    return out;

  ZStar zs;
  if (s.antennas() == 1) {
    // A scalar beam has |u^H hbar_r| = ||hbar_r||: z = 1 is the only choice.
    zs.x_star = zs.z_star = 1.0;
    zs.candidates = {Candidate{1.0, 1.0, objective_g(1.0, out.params)}};
  } else {
    zs = solve_z_star(out.params);
  }
  out.candidates = zs.candidates;

  const double g_star = objective_g(zs.z_star, out.params);
  if (!(g_star > 1.0)) return out;

  out.positive = true;
  out.secrecy_rate_bits = std::log2(g_star);
  out.z_star = zs.z_star;
  out.x_star = zs.x_star;

  ComplexVec u = beamformer(s, out.params, zs.z_star);
  CovarianceMatrix q{u.size(), std::vector<Complex>(u.size() * u.size())};
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) q.entries[i * u.size() + j] = s.power * u[i] * std::conj(u[j]);
  out.u_star = std::move(u);
  out.q_star = std::move(q);
  return out;
}

}  // namespace wiretap
