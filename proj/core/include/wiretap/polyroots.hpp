// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace wiretap {

// Real polynomial of degree at most 6, coefficients highest degree first:
//   coeffs[0] x^n + coeffs[1] x^(n-1) + ... + coeffs[n].
class RealPolynomial {
 public:
  static constexpr std::size_t kMaxDegree = 6;
  // Leading coefficients with |c| <= kDegreeDropTol * max|c| are stripped.
  static constexpr double kDegreeDropTol = 1e-12;

  // Throws std::invalid_argument on an empty, all-zero, non-finite or
  // over-long coefficient list.
  explicit RealPolynomial(std::vector<double> coeffs);

  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  int nominal_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int effective_degree() const noexcept { return nominal_degree() - leading_dropped_; }
  // Coefficients with the negligible leading terms removed.
  std::span<const double> effective_coefficients() const noexcept {
    return std::span<const double>(coeffs_).subspan(leading_dropped_);
  }

  std::complex<double> operator()(std::complex<double> x) const;
  double operator()(double x) const;
  // sum |c_i| |x|^(n-i), the natural size of p(x) for residual checks.
  double magnitude_at(std::complex<double> x) const;

 private:
  std::vector<double> coeffs_;
  int leading_dropped_ = 0;
};

struct RootSet {
  std::vector<std::complex<double>> roots;
  int effective_degree = 0;
};

using Matrix6 = std::array<std::array<double, 6>, 6>;

// First row (-a1/a0, ..., -a6/a0), ones on the subdiagonal, zeros elsewhere.
// Requires effective degree exactly 6.
Matrix6 companion_matrix(const RealPolynomial& p);

// All complex roots of the effective-degree polynomial. Degree <= 2 is
// solved in closed form, higher degrees through companion eigenvalues.
RootSet roots(const RealPolynomial& p);

// Real roots (|imag| <= 1e-8 max(1, |root|)) whose real part lies in
// [x_lo - 1e-12, x_hi + 1e-12], clamped into [x_lo, x_hi]. Order preserved.
std::vector<double> filter_feasible(const RootSet& rs, double x_lo, double x_hi);

namespace linalg {

// Eigenvalues of a dense real n x n matrix already in upper Hessenberg form
// (row-major). Parlett-Reinsch balancing, then Francis double-shift QR.
// Throws std::runtime_error if the iteration fails to converge.
std::vector<std::complex<double>> hessenberg_eigenvalues(std::vector<double> h, int n);

}  // namespace linalg

}  // namespace wiretap
