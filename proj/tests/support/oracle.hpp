#pragma once

// Small independent reference computations for the tests. Nothing here calls
// into the library's linear algebra.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "coxcoh/matrix.hpp"

namespace oracle {

using QMatrix = std::vector<std::vector<mpq_class>>;

// Plain row reduction over Q on a copy.
inline std::size_t rank(QMatrix a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline QMatrix to_q(const coxcoh::ExactMatrix& m) {
  QMatrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.entry(i, j)[0];
  return out;
}

inline coxcoh::ExactMatrix from_q(const QMatrix& q) {
  const std::size_t cols = q.empty() ? 0 : q[0].size();
  coxcoh::ExactMatrix m(coxcoh::rationals(), q.size(), cols);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, q[i][j]);
  return m;
}

// Random rational matrix of the given shape and target rank (at most), built
// as a product of two random factors so low ranks actually occur.
inline QMatrix random_q(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  QMatrix a(rows, std::vector<mpq_class>(inner)), b(inner, std::vector<mpq_class>(cols));
  for (auto& row : a)
    for (auto& x : row) x = mpq_class(num(rng), den(rng)), x.canonicalize();
  for (auto& row : b)
    for (auto& x : row) x = mpq_class(num(rng), den(rng)), x.canonicalize();
  QMatrix c(rows, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Poincare series coefficients (t^0..t^top) of Tor^R(k,k) for the Golod ring
// R = k[x_1..x_m]/m^3, from the Betti numbers of R over the polynomial ring:
// P(t) = (1+t)^m / (1 - sum_i beta_i t^{i+1}).
inline std::vector<long> golod_tor_dims(int m, int top) {
  auto binom = [](long n, long k) {
    if (k < 0 || k > n) return 0L;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  // Eagon-Northcott: beta_i(S/m^d) = C(d+m-1, d+i-1) C(d+i-2, i-1) for i >= 1.
  const int d = 3;
  std::vector<long> beta(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 1; i <= m; ++i) beta[static_cast<std::size_t>(i)] = binom(d + m - 1, d + i - 1) * binom(d + i - 2, i - 1);
  std::vector<long> denom(static_cast<std::size_t>(top) + 1, 0);
  denom[0] = 1;
  for (int n = 1; n <= top; ++n)
    for (int i = 1; i <= m; ++i)
      if (n - i - 1 >= 0) denom[static_cast<std::size_t>(n)] += beta[static_cast<std::size_t>(i)] * denom[static_cast<std::size_t>(n - i - 1)];
  std::vector<long> out(static_cast<std::size_t>(top) + 1, 0);
  for (int n = 0; n <= top; ++n)
    for (int k = 0; k <= m && k <= n; ++k) out[static_cast<std::size_t>(n)] += binom(m, k) * denom[static_cast<std::size_t>(n - k)];
  return out;
}

}  // namespace oracle
