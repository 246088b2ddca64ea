#pragma once

// Independent oracles for the test suites. Nothing here calls the HNF,
// Bareiss or box-reduction code paths it is used to check.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "boxdioph/exact_arith.hpp"

namespace boxdioph::testing {

inline long uniform(std::mt19937_64 &rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng);
}

inline IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows,
                               std::size_t cols, long lo, long hi) {
  IntMatrix M(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      M(i, j) = uniform(rng, lo, hi);
  return M;
}

inline IntVector random_vector(std::mt19937_64 &rng, std::size_t n, long lo,
                               long hi) {
  IntVector v(n);
  for (auto &x : v)
    x = uniform(rng, lo, hi);
  return v;
}

/// Product of random elementary column operations.
inline IntMatrix random_unimodular(std::mt19937_64 &rng, std::size_t n,
                                   int steps = 12) {
  IntMatrix V = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    if (i == j)
      continue;
    const long k = uniform(rng, -3, 3);
    for (std::size_t r = 0; r < n; ++r)
      V(r, i) += k * V(r, j);
  }
  return V;
}

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix &M) {
  const std::size_t n = M.rows();
  if (n == 0)
    return 1;
  if (n == 1)
    return M(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(M(0, c)) == 0)
      continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c)
          minor(i - 1, k++) = M(i, j);
    const Integer term = M(0, c) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

/// gcd of all maximal minors by enumerating column subsets.
inline Integer gcd_of_minors_by_enumeration(const IntMatrix &A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i)
    idx[i] = i;
  Integer g = 0;
  while (true) {
    g = gcd(g, cofactor_det(A.select_columns(idx)));
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1)
      --i;
    if (i == 0)
      break;
    ++idx[i - 1];
    for (std::size_t k = i; k < m; ++k)
      idx[k] = idx[k - 1] + 1;
  }
  return g;
}

/// First k-subset of columns (lexicographic) with nonzero determinant.
inline std::optional<std::vector<std::size_t>>
nonsingular_column_subset(const IntMatrix &M, std::size_t k) {
  const std::size_t n = M.cols();
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    IntMatrix S = M.select_columns(idx);
    if (S.rows() == k && cofactor_det(S) != 0)
      return idx;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

/// Frobenius number by a plain reachability table over 0..limit.
inline long frobenius_by_coin_table(const std::vector<long> &a, long limit) {
  std::vector<bool> reach(static_cast<std::size_t>(limit + 1), false);
  reach[0] = true;
  for (long v = 1; v <= limit; ++v)
    for (long c : a)
      if (c <= v && reach[static_cast<std::size_t>(v - c)]) {
        reach[static_cast<std::size_t>(v)] = true;
        break;
      }
  long last = -1;
  for (long v = 0; v <= limit; ++v)
    if (!reach[static_cast<std::size_t>(v)])
      last = v;
  return last;
}

} // namespace boxdioph::testing
