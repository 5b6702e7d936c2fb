#pragma once

// Test-only oracles that share no code path with the library engines.

#include <complex>
#include <vector>

#include "rigidpack/ladder.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

/// Truncated dense matrices of x = (a + a^dag)/sqrt2 and p = i(a^dag - a)/sqrt2,
/// built straight from a|n> = sqrt(n)|n-1>.
inline Matrix quadrature_matrix(rigidpack::Quadrature q, int dim) {
  Matrix m(dim, std::vector<Complex>(dim, 0.0));
  const double h = 1.0 / std::sqrt(2.0);
  for (int n = 1; n < dim; ++n) {
    const double s = std::sqrt(static_cast<double>(n));
    // <n-1|a|n> = sqrt(n), <n|a^dag|n-1> = sqrt(n)
    if (q == rigidpack::Quadrature::X) {
      m[n - 1][n] = h * s;
      m[n][n - 1] = h * s;
    } else {
      m[n - 1][n] = Complex(0, -h * s);
      m[n][n - 1] = Complex(0, h * s);
    }
  }
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const auto n = a.size();
  Matrix c(n, std::vector<Complex>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

/// Dense product of the word's quadrature matrices. Entries with
/// m, n <= dim - 1 - |word| are free of truncation error.
inline Matrix word_matrix(const rigidpack::Word& w, int dim) {
  Matrix m(dim, std::vector<Complex>(dim, 0.0));
  for (int i = 0; i < dim; ++i) m[i][i] = 1.0;
  for (auto q : w) m = multiply(m, quadrature_matrix(q, dim));
  return m;
}

/// <psi| M |psi> for a dense matrix.
inline Complex expectation(const Matrix& m, const std::vector<Complex>& psi) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) s += std::conj(psi[i]) * m[i][j] * psi[j];
  return s;
}

/// M v on a vector of matching length.
inline std::vector<Complex> mat_vec(const Matrix& m, const std::vector<Complex>& v) {
  std::vector<Complex> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

/// <psi| (x - xc)^k (p - pc)^l |psi> in natural units with dense matrices on a
/// basis padded far enough that truncation never enters.
inline Complex dense_centered_moment(std::vector<Complex> psi, int k, int l, double xc,
                                     double pc) {
  const int dim = static_cast<int>(psi.size()) + k + l + 2;
  psi.resize(static_cast<std::size_t>(dim), 0.0);
  auto X = quadrature_matrix(rigidpack::Quadrature::X, dim);
  auto P = quadrature_matrix(rigidpack::Quadrature::P, dim);
  for (int i = 0; i < dim; ++i) {
    X[i][i] -= xc;
    P[i][i] -= pc;
  }
  auto v = psi;
  for (int j = 0; j < l; ++j) v = mat_vec(P, v);
  for (int j = 0; j < k; ++j) v = mat_vec(X, v);
  Complex s = 0.0;
  for (int i = 0; i < dim; ++i) s += std::conj(psi[i]) * v[i];
  return s;
}

/// Coherent-state amplitudes exp(-|a|^2/2) a^n / sqrt(n!), n = 0..nmax.
inline std::vector<Complex> coherent(Complex alpha, int nmax) {
  std::vector<Complex> c(static_cast<std::size_t>(nmax) + 1);
  c[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= nmax; ++n) c[n] = c[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  return c;
}

}  // namespace oracle
