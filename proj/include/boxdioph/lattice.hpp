#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boxdioph/exact_arith.hpp"

namespace boxdioph {

/// Gamma(A, b) = particular + integer span of the columns of kernel_basis.
struct AffineLatticeRep {
  IntVector particular;
  IntMatrix kernel_basis; // n x (n - m)
};

/// Either the integer points of {x : A x = b} or std::nullopt when there are
/// none. The kernel basis is the trailing n - m columns of the HNF transform.
std::optional<AffineLatticeRep> integer_solution_set(const IntMatrix &A,
                                                     std::span<const Integer> b);

/// Drops the first m coordinates of every column of `vectors`.
IntMatrix project_drop_m(const IntMatrix &vectors, std::size_t m);
IntVector project_drop_m(std::span<const Integer> vector, std::size_t m);

/// The unique triangular basis g_1, ..., g_d of a full-rank lattice in Z^d
/// with g_i in span(e_1, ..., e_i), v_ii > 0 and 0 <= v_ij < v_jj for i > j.
///
/// Storage follows the coefficient layout: coeffs(i, j) = v_ij is the j-th
/// coordinate of g_i, so `coeffs` is lower triangular and its rows are the
/// basis vectors. `as_columns()` gives the same basis with vectors as columns.
class SpecialBasis {
public:
  explicit SpecialBasis(IntMatrix coeffs);

  std::size_t dim() const noexcept { return coeffs_.rows(); }
  const IntMatrix &coeffs() const noexcept { return coeffs_; }
  IntVector vector(std::size_t i) const { return coeffs_.row(i); }
  IntVector diagonal() const;
  IntMatrix as_columns() const { return coeffs_.transpose(); }

  friend bool operator==(const SpecialBasis &, const SpecialBasis &) = default;

private:
  IntMatrix coeffs_;
};

/// Computes the special basis of the lattice generated by the columns of
/// `basis` (d x d). Obtained from the column HNF after reversing the
/// coordinate order and the order of the resulting vectors.
SpecialBasis special_basis(const IntMatrix &basis);

struct GramSchmidtData {
  std::vector<RatVector> orthogonal;  // hat g_1 ... hat g_d
  std::vector<RatVector> mu;          // mu[i][j] for j < i
  std::vector<Rational> squared_norms;
};

/// Exact Gram-Schmidt orthogonalisation of the columns of `basis`.
GramSchmidtData gram_schmidt(const IntMatrix &basis);

struct BoxReduction {
  RatVector y;            // lattice point
  RatVector w;            // x - y, inside the half-open Gram-Schmidt box
  IntVector multipliers;  // y = sum multipliers[i] * b_i
};

/// Nearest-plane style sweep with floors: for i = d, ..., 1 subtract
/// floor(lambda_i) * b_i where lambda_i is the current coefficient of
/// hat b_i. The remainder has every Gram-Schmidt coefficient in [0, 1).
BoxReduction box_reduce(const IntMatrix &basis, std::span<const Rational> x);
BoxReduction box_reduce(const IntMatrix &basis, std::span<const Integer> x);

/// Gram-Schmidt coefficients of x with respect to `gs`.
RatVector gs_coordinates(const GramSchmidtData &gs,
                         std::span<const Rational> x);

Integer lattice_determinant(const SpecialBasis &V);

} // namespace boxdioph
