#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "classpower/errors.hpp"

namespace classpower {

using Complex = std::complex<double>;

/// Dense row-major complex matrix, sized for class-matrix work (k <= 64).
struct CMatrix {
  std::size_t n = 0;
  std::vector<Complex> a;

  explicit CMatrix(std::size_t n_) : n(n_), a(n_ * n_) {}
  Complex& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

namespace linalg {

inline double frobenius_norm(const CMatrix& m) {
  double s = 0;
  for (const Complex& z : m.a) s += std::norm(z);
  return std::sqrt(s);
}

/// Householder similarity reduction to upper Hessenberg form, in place.
inline void hessenberg(CMatrix& h) {
  const std::size_t n = h.n;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    double colnorm = 0;
    for (std::size_t i = j + 1; i < n; ++i) colnorm += std::norm(h(i, j));
    colnorm = std::sqrt(colnorm);
    if (colnorm < 1e-300) continue;

    Complex x0 = h(j + 1, j);
    Complex phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : Complex{1, 0};
    Complex alpha = -phase * colnorm;

    std::vector<Complex> v(n - j - 1);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = h(j + 1 + i, j);
    v[0] -= alpha;
    double vnorm = 0;
    for (const Complex& z : v) vnorm += std::norm(z);
    if (vnorm < 1e-300) continue;
    vnorm = std::sqrt(vnorm);
    for (Complex& z : v) z /= vnorm;

    // rows: H <- (I - 2 v v*) H on the trailing rows
    for (std::size_t c = j; c < n; ++c) {
      Complex dot{0, 0};
      for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(v[i]) * h(j + 1 + i, c);
      dot *= 2.0;
      for (std::size_t i = 0; i < v.size(); ++i) h(j + 1 + i, c) -= dot * v[i];
    }
    // columns: H <- H (I - 2 v v*)
    for (std::size_t r = 0; r < n; ++r) {
      Complex dot{0, 0};
      for (std::size_t i = 0; i < v.size(); ++i) dot += h(r, j + 1 + i) * v[i];
      dot *= 2.0;
      for (std::size_t i = 0; i < v.size(); ++i) h(r, j + 1 + i) -= dot * std::conj(v[i]);
    }
  }
}

/// Eigenvalues of a general complex matrix via shifted QR on the Hessenberg
/// form with Givens rotations. Order follows deflation, not magnitude.
inline std::vector<Complex> eigenvalues(CMatrix h) {
  const std::size_t n = h.n;
  std::vector<Complex> eig(n);
  if (n == 0) return eig;
  if (n == 1) {
    eig[0] = h(0, 0);
    return eig;
  }
  hessenberg(h);

  const double scale = frobenius_norm(h) + 1e-300;
  auto negligible = [&h, scale](std::size_t i) {
    return std::abs(h(i, i - 1)) <= 1e-15 * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i))) +
                                        1e-300 * scale;
  };

  std::size_t active = n;
  std::size_t iterations = 0;
  const std::size_t max_iterations = 200 * n;
  while (active > 0) {
    if (active == 1) {
      eig[0] = h(0, 0);
      break;
    }
    // deflate converged trailing eigenvalue
    if (negligible(active - 1)) {
      eig[active - 1] = h(active - 1, active - 1);
      --active;
      continue;
    }
    // start of the unreduced trailing block
    std::size_t l = active - 1;
    while (l > 0 && !negligible(l)) --l;

    if (++iterations > max_iterations)
      throw InternalError("QR eigenvalue iteration failed to converge");

    // Wilkinson shift: eigenvalue of the trailing 2x2 nearest its corner
    Complex a = h(active - 2, active - 2), b = h(active - 2, active - 1);
    Complex c = h(active - 1, active - 2), d = h(active - 1, active - 1);
    Complex tr = a + d;
    Complex disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
    Complex mu1 = (tr + disc) / 2.0, mu2 = (tr - disc) / 2.0;
    Complex mu = std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
    if (iterations % 17 == 0) mu = d + Complex{std::abs(c), 0};  // exceptional shift

    // explicit shifted QR sweep on the block [l, active)
    for (std::size_t i = l; i < active; ++i) h(i, i) -= mu;
    std::vector<std::pair<Complex, Complex>> rot(active);  // (c, s) per rotation
    for (std::size_t i = l; i + 1 < active; ++i) {
      Complex f = h(i, i), g = h(i + 1, i);
      double r = std::sqrt(std::norm(f) + std::norm(g));
      Complex cs, sn;
      if (r < 1e-300) {
        cs = 1;
        sn = 0;
      } else {
        cs = std::conj(f) / r;
        sn = std::conj(g) / r;
      }
      rot[i] = {cs, sn};
      for (std::size_t col = i; col < active; ++col) {
        Complex u = h(i, col), w = h(i + 1, col);
        h(i, col) = cs * u + sn * w;
        h(i + 1, col) = -std::conj(sn) * u + std::conj(cs) * w;
      }
    }
    for (std::size_t i = l; i + 1 < active; ++i) {
      auto [cs, sn] = rot[i];
      for (std::size_t row = l; row <= std::min(i + 1, active - 1); ++row) {
        Complex u = h(row, i), w = h(row, i + 1);
        h(row, i) = u * std::conj(cs) + w * std::conj(sn);
        h(row, i + 1) = -u * sn + w * cs;
      }
    }
    for (std::size_t i = l; i < active; ++i) h(i, i) += mu;
  }
  return eig;
}

/// Solve (m)x = b by LU with partial pivoting, in place on copies.
/// Near-zero pivots are bumped to a tiny multiple of the matrix scale, which
/// is exactly what inverse iteration wants for a singular shift.
inline std::vector<Complex> solve_perturbed(CMatrix m, std::vector<Complex> b) {
  const std::size_t n = m.n;
  const double tiny = 1e-300 + 1e-18 * frobenius_norm(m);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(piv, c));
      std::swap(b[col], b[piv]);
    }
    if (std::abs(m(col, col)) < tiny) m(col, col) = tiny;
    for (std::size_t r = col + 1; r < n; ++r) {
      Complex f = m(r, col) / m(col, col);
      m(r, col) = 0;
      if (f == Complex{0, 0}) continue;
      for (std::size_t c = col + 1; c < n; ++c) m(r, c) -= f * m(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m(i, c) * x[c];
    x[i] = s / m(i, i);
  }
  return x;
}

/// Eigenvector for a simple eigenvalue via inverse iteration.
inline std::vector<Complex> eigenvector(const CMatrix& m, Complex lambda) {
  const std::size_t n = m.n;
  CMatrix shifted = m;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
  std::vector<Complex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 / (1.0 + static_cast<double>(i));
  for (int pass = 0; pass < 3; ++pass) {
    v = solve_perturbed(shifted, std::move(v));
    double big = 0;
    for (const Complex& z : v) big = std::max(big, std::abs(z));
    if (big < 1e-300) throw InternalError("inverse iteration collapsed");
    for (Complex& z : v) z /= big;
  }
  return v;
}

}  // namespace linalg
}  // namespace classpower
