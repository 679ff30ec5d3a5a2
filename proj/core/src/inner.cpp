// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#include "wiretap/inner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wiretap {

namespace {

ComplexVec axpy(std::span<const Complex> base, Complex alpha, std::span<const Complex> dir) {
  ComplexVec out(base.begin(), base.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += alpha * dir[i];
  return out;
}

}  // namespace

InnerSolution worst_legit_channel(std::span<const Complex> u, std::span<const Complex> hbar_r,
                                  double eps_r) {
  const Complex proj = inner(u, hbar_r);
  const double mag = std::abs(proj);
  if (eps_r == 0.0) return {mag * mag, ComplexVec(hbar_r.begin(), hbar_r.end())};
  if (mag <= eps_r)
    throw std::domain_error("worst_legit_channel: |u^H hbar_r| <= eps_r, projection can vanish");

  const double shrunk = mag - eps_r;
  // u^H (hbar - eps (proj/|proj|) u) = proj (1 - eps/|proj|)
  return {shrunk * shrunk, axpy(hbar_r, -eps_r * proj / mag, u)};
}

InnerSolution worst_eaves_channel(std::span<const Complex> u, std::span<const Complex> hbar_e,
                                  double eps_e) {
  const Complex proj = inner(u, hbar_e);
  const double mag = std::abs(proj);
  const double grown = mag + eps_e;
  if (eps_e == 0.0) return {grown * grown, ComplexVec(hbar_e.begin(), hbar_e.end())};
  const Complex phase = mag == 0.0 ? Complex{1.0, 0.0} : proj / mag;
  return {grown * grown, axpy(hbar_e, eps_e * phase, u)};
}

double psi(double z, const ScalarParams& p, double hbar_e_norm) {
  const double s = p.r_perp();
  if (z < s) return 0.0;
  const double zc = std::sqrt(std::max(0.0, 1.0 - z * z));
  return hbar_e_norm * std::max(0.0, p.r * z - s * zc);
}

Lemma1Solution lemma1_solve(std::span<const Complex> a_vec, std::span<const Complex> b_vec,
                            double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("lemma1_solve: q outside [0, 1]");
  const Complex ab = inner(a_vec, b_vec);
  const double r = std::abs(ab);
  if (r >= 1.0) throw std::invalid_argument("lemma1_solve: parallel inputs (r >= 1)");

  const double s2 = 1.0 - r * r;
  if (q <= s2) return {0.0, std::nullopt};

  // q > 1 - r^2 forces r > 0, so the division below is safe.
  const double s = std::sqrt(s2);
  const double sq = std::sqrt(q);
  const double sqc = std::sqrt(1.0 - q);
  const double c2 = sqc / s;
  const double value = (r * sq - s * sqc) * (r * sq - s * sqc);

  const Complex coef_a = -(c2 + sq / r) * ab;
  ComplexVec u(a_vec.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = coef_a * a_vec[i] + c2 * b_vec[i];
  return {value, std::move(u)};
}

}  // namespace wiretap
