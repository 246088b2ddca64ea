#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "boxdioph/error.hpp"

namespace boxdioph {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix of arbitrary-precision integers. The shape is fixed
/// at construction.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::span<const IntVector> columns,
                                std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix select_columns(std::span<const std::size_t> cols) const;
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
IntVector operator*(const IntMatrix &a, std::span<const Integer> x);

std::string to_string(const IntMatrix &m);
std::string to_string(std::span<const Integer> v);
std::string to_string(const Rational &q);

IntVector make_int_vector(std::initializer_list<long> values);

/// num/den in lowest terms with positive denominator.
Rational make_rational(const Integer &num, const Integer &den);

Integer floor_of(const Rational &q);
Integer ceil_of(const Rational &q);
bool is_integer(const Rational &q);

/// Column-style Hermite normal form of a full-row-rank matrix M (m x n):
/// M * U = H with U unimodular, H = [L | 0], L lower triangular with positive
/// diagonal and every entry left of a pivot reduced into [0, pivot).
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
};

HnfResult hnf_column(const IntMatrix &M);

/// Fraction-free (Bareiss) determinant.
Integer det_exact(const IntMatrix &M);

/// gcd of all maximal minors of a full-row-rank A, read off the HNF pivot
/// block (the gcd of maximal minors is invariant under unimodular column
/// operations and equals |det L| for H = [L | 0]).
Integer gcd_max_minors(const IntMatrix &A);

/// Exact solution of B x = v for square nonsingular B.
RatVector solve_rational(const IntMatrix &B, std::span<const Integer> v);

/// Rational inverse of a square nonsingular matrix, row-major.
std::vector<RatVector> inverse_rational(const IntMatrix &B);

Integer squared_norm(std::span<const Integer> v);
Rational squared_norm(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

} // namespace boxdioph
