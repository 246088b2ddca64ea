#include "boxdioph/cone.hpp"

#include <cmath>

namespace boxdioph {

namespace {

void check_square(const IntMatrix &B) {
  if (B.rows() != B.cols())
    throw Error(ErrorKind::NotSquare, "cone generator matrix must be square");
}

// Decides c >= sqrt(s2) * e without radicals (s2 >= 0).
FacetMargin compare_against_scaled(std::size_t facet, const Rational &c,
                                   const Rational &s2, const Rational &e) {
  FacetMargin f;
  f.facet = facet;
  f.coordinate = c;
  f.lhs_squared = c * c;
  f.rhs_squared = s2 * e * e;
  f.lhs_nonnegative = sgn(c) >= 0;
  f.rhs_nonnegative = sgn(s2) == 0 || sgn(e) >= 0;
  if (f.lhs_nonnegative && !f.rhs_nonnegative)
    f.passes = true;
  else if (!f.lhs_nonnegative && f.rhs_nonnegative)
    f.passes = false;
  else if (f.lhs_nonnegative)
    f.passes = f.lhs_squared >= f.rhs_squared;
  else
    f.passes = f.lhs_squared <= f.rhs_squared;
  return f;
}

} // namespace

bool in_cone(const IntMatrix &B, std::span<const Integer> y) {
  check_square(B);
  for (const auto &c : solve_rational(B, y))
    if (sgn(c) < 0)
      return false;
  return true;
}

Integer max_squared_column_norm(const IntMatrix &M) {
  Integer best = 0;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    const Integer s = squared_norm(M.column(j));
    if (s > best)
      best = s;
  }
  return best;
}

ConditionReport deep_cone_condition(const IntMatrix &B, const IntMatrix &N,
                                    const Integer &gcdA,
                                    std::span<const Integer> b) {
  check_square(B);
  if (N.rows() != B.rows() || b.size() != B.rows())
    throw Error(ErrorKind::DimensionMismatch, "B, N and b must share rows");
  if (sgn(gcdA) <= 0)
    throw Error(ErrorKind::DimensionMismatch, "gcd(A) must be positive");

  const auto inv = inverse_rational(B);
  const RatVector coords = solve_rational(B, b);
  const Integer det = abs(det_exact(B));
  const Rational D = make_rational(det, gcdA);
  const Rational excess = D - 1;

  ConditionReport report;
  report.t_squared = Rational(max_squared_column_norm(N)) * excess * excess;
  report.holds = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    // threshold = t * |row_i(B^-1)|, so threshold^2 = t^2 * |row_i|^2
    const Rational row_norm2 = squared_norm(inv[i]);
    FacetMargin f = compare_against_scaled(i, coords[i],
                                           report.t_squared * row_norm2, 1);
    report.holds = report.holds && f.passes;
    report.per_facet.push_back(std::move(f));
  }
  return report;
}

std::optional<ConditionReport>
shifted_cone_condition_m2(const IntMatrix &B, const IntMatrix &N,
                          std::span<const Integer> b) {
  check_square(B);
  if (B.rows() != 2)
    throw Error(ErrorKind::WrongM, "shifted-cone condition needs m = 2");
  if (N.rows() != 2 || b.size() != 2)
    throw Error(ErrorKind::DimensionMismatch, "B, N and b must share rows");

  for (std::size_t j = 0; j < N.cols(); ++j)
    if (!in_cone(B, N.column(j)))
      return std::nullopt;

  IntVector v(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j)
      v[i] += B(i, j);
    for (std::size_t j = 0; j < N.cols(); ++j)
      v[i] += N(i, j);
  }

  const Integer det = abs(det_exact(B));
  const Integer lb2 = max_squared_column_norm(B);
  const Integer ln2 = max_squared_column_norm(N);
  const Integer excess = det - 1;

  ConditionReport report;
  report.t_squared = make_rational(lb2 * ln2 * excess * excess, det * det);
  const RatVector cb = solve_rational(B, b);
  const RatVector cv = solve_rational(B, v);
  report.holds = true;
  for (std::size_t i = 0; i < 2; ++i) {
    FacetMargin f = compare_against_scaled(i, cb[i], report.t_squared, cv[i]);
    report.holds = report.holds && f.passes;
    report.per_facet.push_back(std::move(f));
  }
  return report;
}

double p_factor(std::size_t m, std::size_t n) {
  return std::sqrt(static_cast<double>(n - m) * static_cast<double>(n) / 2.0);
}

double general_t_bound(const IntMatrix &A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (m >= n)
    throw Error(ErrorKind::RankDeficient, "need m < n");
  const Integer gram_det = det_exact(A * A.transpose());
  if (sgn(gram_det) <= 0)
    throw Error(ErrorKind::RankDeficient, "A does not have full row rank");
  // Work in logs so huge determinants do not overflow a double.
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, gram_det.get_mpz_t());
  const double log2_det = std::log2(mant) + static_cast<double>(exp);
  const double log2_value = (static_cast<double>(n - m) / 2.0 - 1.0) +
                            std::log2(p_factor(m, n)) + log2_det / 2.0;
  return std::exp2(log2_value);
}

Integer ceil_sqrt(const Rational &q) {
  if (sgn(q) <= 0)
    return 0;
  const Integer c = ceil_of(q);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), c.get_mpz_t());
  while (Rational(s * s) < q)
    ++s;
  while (sgn(s) > 0 && Rational((s - 1) * (s - 1)) >= q)
    --s;
  return s;
}

} // namespace boxdioph
