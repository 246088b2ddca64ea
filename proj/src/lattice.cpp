#include "boxdioph/lattice.hpp"

#include <utility>

namespace boxdioph {

std::optional<AffineLatticeRep> integer_solution_set(const IntMatrix &A,
                                                     std::span<const Integer> b) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (b.size() != m)
    throw Error(ErrorKind::DimensionMismatch, "b has wrong length");
  const HnfResult hnf = hnf_column(A);

  // Forward substitution in the pivot block; any non-exact division proves
  // that no integer solution exists.
  IntVector y(n);
  for (std::size_t i = 0; i < m; ++i) {
    Integer rhs = b[i];
    for (std::size_t j = 0; j < i; ++j)
      rhs -= hnf.H(i, j) * y[j];
    if (!mpz_divisible_p(rhs.get_mpz_t(), hnf.H(i, i).get_mpz_t()))
      return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), rhs.get_mpz_t(), hnf.H(i, i).get_mpz_t());
  }

  AffineLatticeRep rep;
  rep.particular = hnf.U * y;
  rep.kernel_basis = IntMatrix(n, n - m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = m; j < n; ++j)
      rep.kernel_basis(i, j - m) = hnf.U(i, j);
  return rep;
}

IntMatrix project_drop_m(const IntMatrix &vectors, std::size_t m) {
  if (vectors.rows() <= m)
    throw Error(ErrorKind::DimensionMismatch,
                "vectors must be longer than the number of dropped coordinates");
  IntMatrix P(vectors.rows() - m, vectors.cols());
  for (std::size_t i = m; i < vectors.rows(); ++i)
    for (std::size_t j = 0; j < vectors.cols(); ++j)
      P(i - m, j) = vectors(i, j);
  return P;
}

IntVector project_drop_m(std::span<const Integer> vector, std::size_t m) {
  if (vector.size() <= m)
    throw Error(ErrorKind::DimensionMismatch,
                "vector must be longer than the number of dropped coordinates");
  return IntVector(vector.begin() + static_cast<std::ptrdiff_t>(m), vector.end());
}

SpecialBasis::SpecialBasis(IntMatrix coeffs) : coeffs_(std::move(coeffs)) {
  const std::size_t d = coeffs_.rows();
  if (coeffs_.cols() != d)
    throw Error(ErrorKind::NotSquare, "special basis must be square");
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_(i, i)) <= 0)
      throw Error(ErrorKind::Internal, "special basis diagonal must be positive");
    for (std::size_t j = 0; j < d; ++j) {
      const Integer &v = coeffs_(i, j);
      if (j > i && sgn(v) != 0)
        throw Error(ErrorKind::Internal, "special basis must be lower triangular");
      if (j < i && (sgn(v) < 0 || v >= coeffs_(j, j)))
        throw Error(ErrorKind::Internal, "special basis entry not reduced");
    }
  }
}

IntVector SpecialBasis::diagonal() const {
  IntVector diag(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    diag[i] = coeffs_(i, i);
  return diag;
}

SpecialBasis special_basis(const IntMatrix &basis) {
  const std::size_t d = basis.rows();
  if (basis.cols() != d)
    throw Error(ErrorKind::NotSquare, "lattice basis must be square");

  IntMatrix reversed(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      reversed(i, j) = basis(d - 1 - i, j);

  HnfResult hnf;
  try {
    hnf = hnf_column(reversed);
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::RankDeficient)
      throw Error(ErrorKind::Singular, "basis vectors are linearly dependent");
    throw;
  }

  // Column c of the reversed HNF is g_{d-1-c}; its row r is coordinate d-1-r.
  IntMatrix coeffs(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t t = 0; t < d; ++t)
      coeffs(k, t) = hnf.H(d - 1 - t, d - 1 - k);
  return SpecialBasis(std::move(coeffs));
}

namespace {

std::vector<RatVector> rational_columns(const IntMatrix &basis) {
  std::vector<RatVector> cols(basis.cols(), RatVector(basis.rows()));
  for (std::size_t j = 0; j < basis.cols(); ++j)
    for (std::size_t i = 0; i < basis.rows(); ++i)
      cols[j][i] = basis(i, j);
  return cols;
}

} // namespace

GramSchmidtData gram_schmidt(const IntMatrix &basis) {
  const std::size_t d = basis.cols();
  GramSchmidtData gs;
  gs.orthogonal = rational_columns(basis);
  gs.mu.assign(d, RatVector(d));
  gs.squared_norms.resize(d);
  const auto original = gs.orthogonal;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = dot(original[i], gs.orthogonal[j]) / gs.squared_norms[j];
      for (std::size_t k = 0; k < basis.rows(); ++k)
        gs.orthogonal[i][k] -= gs.mu[i][j] * gs.orthogonal[j][k];
    }
    gs.squared_norms[i] = squared_norm(gs.orthogonal[i]);
    if (sgn(gs.squared_norms[i]) == 0)
      throw Error(ErrorKind::Singular, "basis vectors are linearly dependent");
  }
  return gs;
}

RatVector gs_coordinates(const GramSchmidtData &gs,
                         std::span<const Rational> x) {
  RatVector lambda(gs.orthogonal.size());
  for (std::size_t i = 0; i < lambda.size(); ++i)
    lambda[i] = dot(x, gs.orthogonal[i]) / gs.squared_norms[i];
  return lambda;
}

BoxReduction box_reduce(const IntMatrix &basis, std::span<const Rational> x) {
  if (x.size() != basis.rows())
    throw Error(ErrorKind::DimensionMismatch, "point and basis dimensions differ");
  const GramSchmidtData gs = gram_schmidt(basis);
  const std::size_t d = basis.cols();

  BoxReduction out;
  out.w.assign(x.begin(), x.end());
  out.multipliers.resize(d);
  for (std::size_t i = d; i-- > 0;) {
    const Rational lambda = dot(out.w, gs.orthogonal[i]) / gs.squared_norms[i];
    const Integer k = floor_of(lambda);
    out.multipliers[i] = k;
    if (sgn(k) == 0)
      continue;
    for (std::size_t r = 0; r < basis.rows(); ++r)
      out.w[r] -= k * basis(r, i);
  }
  out.y.resize(x.size());
  for (std::size_t r = 0; r < x.size(); ++r)
    out.y[r] = x[r] - out.w[r];
  return out;
}

BoxReduction box_reduce(const IntMatrix &basis, std::span<const Integer> x) {
  RatVector q(x.begin(), x.end());
  return box_reduce(basis, std::span<const Rational>(q));
}

Integer lattice_determinant(const SpecialBasis &V) {
  Integer det = 1;
  for (std::size_t i = 0; i < V.dim(); ++i)
    det *= V.coeffs()(i, i);
  return det;
}

} // namespace boxdioph
