#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boxdioph/exact_arith.hpp"

namespace boxdioph {

/// One facet comparison: coordinate c = (B^-1 b)_i against a threshold that
/// is the square root of rhs_squared, signed by the shift direction.
struct FacetMargin {
  std::size_t facet = 0;
  Rational coordinate;       // (B^-1 b)_i
  Rational lhs_squared;      // coordinate^2
  Rational rhs_squared;      // threshold^2
  bool lhs_nonnegative = false;
  bool rhs_nonnegative = true;
  bool passes = false;
};

struct ConditionReport {
  bool holds = false;
  std::vector<FacetMargin> per_facet;
  /// Squared distance threshold (deep cone) or squared shift factor
  /// (shifted cone).
  Rational t_squared;
};

/// y lies in the cone generated by the columns of B (B^-1 y >= 0).
bool in_cone(const IntMatrix &B, std::span<const Integer> y);

/// Largest squared Euclidean column length of M.
Integer max_squared_column_norm(const IntMatrix &M);

/// Whether b is at Euclidean distance >= t from the boundary of cone(B), with
/// t = l_N * (|det B| / gcdA - 1).
///
/// cone(B) is simplicial and full-dimensional, so a ball of radius t around b
/// fits inside it exactly when b is on the inner side of every facet
/// hyperplane {y : (B^-1 y)_i = 0} with distance (B^-1 b)_i / |row_i(B^-1)|
/// at least t. Each comparison is squared so no radicals appear; the sign of
/// (B^-1 b)_i is checked first. Boundary distance equal to t passes.
ConditionReport deep_cone_condition(const IntMatrix &B, const IntMatrix &N,
                                    const Integer &gcdA,
                                    std::span<const Integer> b);

/// Shifted-cone condition for m = 2: b - s v in cone(B) with v the sum of all
/// columns of A = (B | N) and s = l_B l_N (|det B| - 1) / |det B|.
/// Returns std::nullopt (not applicable) unless every column of N lies in
/// cone(B), i.e. cone(B) = cone(A).
std::optional<ConditionReport>
shifted_cone_condition_m2(const IntMatrix &B, const IntMatrix &N,
                          std::span<const Integer> b);

/// p(m, n) = sqrt((n - m) n / 2).
double p_factor(std::size_t m, std::size_t n);

/// Floating-point value of 2^((n-m)/2 - 1) p(m, n) sqrt(det(A A^T)).
/// Diagnostic only; never used in an exact decision.
double general_t_bound(const IntMatrix &A);

/// Smallest non-negative integer s with s^2 >= q (q >= 0).
Integer ceil_sqrt(const Rational &q);

} // namespace boxdioph
