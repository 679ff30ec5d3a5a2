// SPDX-License-Identifier: Apache-2.0
//
// wiretap - worst-case secrecy rates for MISO wiretap channels
// ------------------------------------------------------------------------

#include "wiretap/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wiretap {

using cplx = std::complex<double>;

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("polynomial has no coefficients");
  if (coeffs_.size() > kMaxDegree + 1)
    throw std::invalid_argument("polynomial degree exceeds 6");
  double largest = 0.0;
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite polynomial coefficient");
    largest = std::max(largest, std::abs(c));
  }
  if (largest == 0.0) throw std::invalid_argument("zero polynomial");

  const double cutoff = kDegreeDropTol * largest;
  while (std::abs(coeffs_[leading_dropped_]) <= cutoff) ++leading_dropped_;
}

cplx RealPolynomial::operator()(cplx x) const {
  cplx acc{0.0, 0.0};
  for (double c : effective_coefficients()) acc = acc * x + c;
  return acc;
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (double c : effective_coefficients()) acc = acc * x + c;
  return acc;
}

double RealPolynomial::magnitude_at(cplx x) const {
  const double ax = std::abs(x);
  double acc = 0.0;
  for (double c : effective_coefficients()) acc = acc * ax + std::abs(c);
  return acc;
}

namespace {

// Monic companion in upper Hessenberg form, first row carrying -a_i/a_0.
std::vector<double> companion_rowmajor(std::span<const double> c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<double> m(static_cast<std::size_t>(n * n), 0.0);
  for (int j = 0; j < n; ++j) m[j] = -c[j + 1] / c[0];
  for (int i = 1; i < n; ++i) m[i * n + (i - 1)] = 1.0;
  return m;
}

std::vector<cplx> quadratic_roots(double a, double b, double c) {
  const double disc = b * b - 4.0 * a * c;
  if (disc >= 0.0) {
    // Avoid cancellation between -b and sqrt(disc).
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    if (q == 0.0) return {cplx{0.0, 0.0}, cplx{0.0, 0.0}};
    return {cplx{q / a, 0.0}, cplx{c / q, 0.0}};
  }
  const double re = -b / (2.0 * a);
  const double im = std::sqrt(-disc) / (2.0 * std::abs(a));
  return {cplx{re, im}, cplx{re, -im}};
}

// Newton refinement, accepted only while it shrinks the residual.
cplx polish(const RealPolynomial& p, cplx x) {
  const auto coeffs = p.effective_coefficients();
  for (int it = 0; it < 3; ++it) {
    cplx val{0.0, 0.0};
    cplx der{0.0, 0.0};
    for (double c : coeffs) {
      der = der * x + val;
      val = val * x + c;
    }
    if (val == cplx{0.0, 0.0} || der == cplx{0.0, 0.0}) break;
    const cplx step = val / der;
    if (std::abs(step) > 0.1 * (1.0 + std::abs(x))) break;
    const cplx next = x - step;
    if (std::abs(p(next)) >= std::abs(val)) break;
    x = next;
  }
  return x;
}

}  // namespace

Matrix6 companion_matrix(const RealPolynomial& p) {
  if (p.effective_degree() != 6)
    throw std::invalid_argument("companion_matrix requires a degree-6 polynomial");
  const auto flat = companion_rowmajor(p.effective_coefficients());
  Matrix6 g{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) g[i][j] = flat[i * 6 + j];
  return g;
}

RootSet roots(const RealPolynomial& p) {
  const auto c = p.effective_coefficients();
  RootSet out;
  out.effective_degree = p.effective_degree();
  switch (out.effective_degree) {
    case 0:
      return out;
    case 1:
      out.roots = {cplx{-c[1] / c[0], 0.0}};
      return out;
    case 2:
      out.roots = quadratic_roots(c[0], c[1], c[2]);
      break;
    default:
      out.roots = linalg::hessenberg_eigenvalues(companion_rowmajor(c), out.effective_degree);
      break;
  }
  for (auto& rho : out.roots) rho = polish(p, rho);
  return out;
}

std::vector<double> filter_feasible(const RootSet& rs, double x_lo, double x_hi) {
  constexpr double kImagTol = 1e-8;
  constexpr double kEdgeTol = 1e-12;
  std::vector<double> out;
  for (const auto& rho : rs.roots) {
    if (std::abs(rho.imag()) > kImagTol * std::max(1.0, std::abs(rho))) continue;
    const double x = rho.real();
    if (x < x_lo - kEdgeTol || x > x_hi + kEdgeTol) continue;
    out.push_back(std::clamp(x, x_lo, x_hi));
  }
  return out;
}

namespace linalg {

namespace {

void balance(std::vector<double>& a, int n) {
  constexpr double radix = std::numeric_limits<double>::radix;
  constexpr double sqrdx = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a[j * n + i]);
        r += std::abs(a[i * n + j]);
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        const double ginv = 1.0 / f;
        for (int j = 0; j < n; ++j) a[i * n + j] *= ginv;
        for (int j = 0; j < n; ++j) a[j * n + i] *= f;
      }
    }
  }
}

double sign_of(double magnitude, double s) { return s >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude); }

}  // namespace

std::vector<cplx> hessenberg_eigenvalues(std::vector<double> h, int n) {
  if (n <= 0 || h.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("hessenberg_eigenvalues: bad matrix size");
  balance(h, n);

  auto at = [&h, n](int i, int j) -> double& { return h[static_cast<std::size_t>(i * n + j)]; };
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxIterations = 60;

  std::vector<cplx> w(static_cast<std::size_t>(n));
  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(at(i, j));

  int nn = n - 1;
  double t = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      // Look for a negligible subdiagonal entry to split the problem.
      for (l = nn; l > 0; --l) {
        double s = std::abs(at(l - 1, l - 1)) + std::abs(at(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(at(l, l - 1)) <= eps * s) {
          at(l, l - 1) = 0.0;
          break;
        }
      }
      double x = at(nn, nn);
      if (l == nn) {
        w[nn--] = cplx{x + t, 0.0};
      } else {
        double y = at(nn - 1, nn - 1);
        double ww = at(nn, nn - 1) * at(nn - 1, nn);
        if (l == nn - 1) {
          const double p = 0.5 * (y - x);
          const double q = p * p + ww;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            w[nn - 1] = w[nn] = cplx{x + z, 0.0};
            if (z != 0.0) w[nn] = cplx{x - ww / z, 0.0};
          } else {
            w[nn] = cplx{x + p, -z};
            w[nn - 1] = std::conj(w[nn]);
          }
          nn -= 2;
        } else {
          if (its == kMaxIterations)
            throw std::runtime_error("hessenberg_eigenvalues: QR iteration did not converge");
          if (its > 0 && its % 10 == 0) {
            // Exceptional shift to break cycles.
            t += x;
            for (int i = 0; i <= nn; ++i) at(i, i) -= x;
            const double s = std::abs(at(nn, nn - 1)) + std::abs(at(nn - 1, nn - 2));
            y = x = 0.75 * s;
            ww = -0.4375 * s * s;
          }
          ++its;
          double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = at(m, m);
            r = x - z;
            double s = y - z;
            p = (r * s - ww) / at(m + 1, m) + at(m, m + 1);
            q = at(m + 1, m + 1) - z - r - s;
            r = at(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(at(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(at(m - 1, m - 1)) + std::abs(z) +
                                            std::abs(at(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (int i = m; i < nn - 1; ++i) {
            at(i + 2, i) = 0.0;
            if (i != m) at(i + 2, i - 1) = 0.0;
          }
          for (int k = m; k < nn; ++k) {
            if (k != m) {
              p = at(k, k - 1);
              q = at(k + 1, k - 1);
              r = 0.0;
              if (k + 1 != nn) r = at(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
              if (l != m) at(k, k - 1) = -at(k, k - 1);
            } else {
              at(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = at(k, j) + q * at(k + 1, j);
              if (k + 1 != nn) {
                p += r * at(k + 2, j);
                at(k + 2, j) -= p * z;
              }
              at(k + 1, j) -= p * y;
              at(k, j) -= p * x;
            }
            const int mmin = nn < k + 3 ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {
              p = x * at(i, k) + y * at(i, k + 1);
              if (k + 1 != nn) {
                p += z * at(i, k + 2);
                at(i, k + 2) -= p * r;
              }
              at(i, k + 1) -= p * q;
              at(i, k) -= p;
            }
          }
        }
      }
    } while (l + 1 < nn);
  }
  return w;
}

}  // namespace linalg

}  // namespace wiretap
