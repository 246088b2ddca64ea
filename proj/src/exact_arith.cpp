#include "boxdioph/exact_arith.hpp"

#include <sstream>
#include <utility>

namespace boxdioph {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::RankDeficient: return "RankDeficient";
  case ErrorKind::NotSquare: return "NotSquare";
  case ErrorKind::Singular: return "Singular";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::WrongM: return "WrongM";
  case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
  case ErrorKind::GcdNotOne: return "GcdNotOne";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::Parse: return "Parse";
  case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long v : r)
      data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i)
    I(i, i) = 1;
  return I;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns,
                                  std::size_t rows) {
  IntMatrix M(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw Error(ErrorKind::DimensionMismatch, "column length differs");
    for (std::size_t i = 0; i < rows; ++i)
      M(i, j) = columns[j][i];
  }
  return M;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix S(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= cols_)
      throw Error(ErrorKind::DimensionMismatch, "column index out of range");
    for (std::size_t i = 0; i < rows_; ++i)
      S(i, k) = (*this)(i, cols[k]);
  }
  return S;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix T(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      T(j, i) = (*this)(i, j);
  return T;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix &a, std::span<const Integer> x) {
  if (a.cols() != x.size())
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product shapes");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] += a(i, j) * x[j];
  return y;
}

std::string to_string(const IntMatrix &m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", " : "") << to_string(m.row(i));
  }
  os << ']';
  return os.str();
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const Rational &q) { return q.get_str(); }

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values)
    v.emplace_back(x);
  return v;
}

Rational make_rational(const Integer &num, const Integer &den) {
  if (sgn(den) == 0)
    throw Error(ErrorKind::Singular, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational &q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational &q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational &q) { return q.get_den() == 1; }

namespace {

// col_a <- x*col_a + y*col_b, col_b <- q*col_a - p*col_b, applied to both H
// and U. The 2x2 transform has determinant -1 when x*p + y*q = 1.
void combine_columns(IntMatrix &M, std::size_t a, std::size_t b,
                     const Integer &x, const Integer &y, const Integer &p,
                     const Integer &q) {
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Integer va = M(r, a);
    Integer vb = M(r, b);
    M(r, a) = x * va + y * vb;
    M(r, b) = q * va - p * vb;
  }
}

void axpy_column(IntMatrix &M, std::size_t dst, std::size_t src,
                 const Integer &k) {
  for (std::size_t r = 0; r < M.rows(); ++r)
    M(r, dst) -= k * M(r, src);
}

void negate_column(IntMatrix &M, std::size_t c) {
  for (std::size_t r = 0; r < M.rows(); ++r)
    M(r, c) = -M(r, c);
}

} // namespace

HnfResult hnf_column(const IntMatrix &M) {
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  if (m > n)
    throw Error(ErrorKind::RankDeficient, "more rows than columns");
  IntMatrix H = M;
  IntMatrix U = IntMatrix::identity(n);

  Integer g, x, y, p, q;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(H(i, j)) == 0)
        continue;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                 H(i, i).get_mpz_t(), H(i, j).get_mpz_t());
      p = H(i, i) / g;
      q = H(i, j) / g;
      combine_columns(H, i, j, x, y, p, q);
      combine_columns(U, i, j, x, y, p, q);
    }
    if (sgn(H(i, i)) == 0)
      throw Error(ErrorKind::RankDeficient,
                  "row " + std::to_string(i) + " is dependent on earlier rows");
    if (sgn(H(i, i)) < 0) {
      negate_column(H, i);
      negate_column(U, i);
    }
    for (std::size_t j = 0; j < i; ++j) {
      Integer k;
      mpz_fdiv_q(k.get_mpz_t(), H(i, j).get_mpz_t(), H(i, i).get_mpz_t());
      if (sgn(k) == 0)
        continue;
      axpy_column(H, j, i, k);
      axpy_column(U, j, i, k);
    }
  }
  return {std::move(H), std::move(U)};
}

Integer det_exact(const IntMatrix &M) {
  const std::size_t n = M.rows();
  if (M.cols() != n)
    throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  if (n == 0)
    return 1;
  IntMatrix A = M;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(A(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(A(r, k)) == 0)
        ++r;
      if (r == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(A(k, j), A(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        A(i, j) = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(A(i, j).get_mpz_t(), A(i, j).get_mpz_t(),
                     prev.get_mpz_t());
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

Integer gcd_max_minors(const IntMatrix &A) {
  const HnfResult hnf = hnf_column(A);
  Integer g = 1;
  for (std::size_t i = 0; i < A.rows(); ++i)
    g *= hnf.H(i, i);
  return g;
}

namespace {

// Reduces [B | rhs] to reduced row echelon form in place; throws on singular B.
void gauss_jordan(std::vector<RatVector> &aug, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(aug[piv][k]) == 0)
      ++piv;
    if (piv == n)
      throw Error(ErrorKind::Singular, "matrix is singular");
    std::swap(aug[k], aug[piv]);
    const Rational inv = 1 / aug[k][k];
    for (auto &v : aug[k])
      v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(aug[i][k]) == 0)
        continue;
      const Rational f = aug[i][k];
      for (std::size_t j = k; j < aug[i].size(); ++j)
        aug[i][j] -= f * aug[k][j];
    }
  }
}

std::vector<RatVector> augmented(const IntMatrix &B, std::size_t extra) {
  const std::size_t n = B.rows();
  if (B.cols() != n)
    throw Error(ErrorKind::NotSquare, "expected a square matrix");
  std::vector<RatVector> aug(n, RatVector(n + extra));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = B(i, j);
  return aug;
}

} // namespace

RatVector solve_rational(const IntMatrix &B, std::span<const Integer> v) {
  const std::size_t n = B.rows();
  if (v.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  auto aug = augmented(B, 1);
  for (std::size_t i = 0; i < n; ++i)
    aug[i][n] = v[i];
  gauss_jordan(aug, n);
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = aug[i][n];
  return x;
}

std::vector<RatVector> inverse_rational(const IntMatrix &B) {
  const std::size_t n = B.rows();
  auto aug = augmented(B, n);
  for (std::size_t i = 0; i < n; ++i)
    aug[i][n + i] = 1;
  gauss_jordan(aug, n);
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = aug[i][n + j];
  return inv;
}

Integer squared_norm(std::span<const Integer> v) {
  Integer s = 0;
  for (const auto &x : v)
    s += x * x;
  return s;
}

Rational squared_norm(std::span<const Rational> v) { return dot(v, v); }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "dot product lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

} // namespace boxdioph
