#include "boxdioph/solver.hpp"

#include <algorithm>

namespace boxdioph {

const char *to_string(SolveStatus status) {
  switch (status) {
  case SolveStatus::IntegerInfeasible: return "infeasible";
  case SolveStatus::Nonnegative: return "nonnegative";
  case SolveStatus::IntegerOnly: return "integer_only";
  }
  return "unknown";
}

std::size_t rank_of(const IntMatrix &M) {
  std::vector<RatVector> rows(M.rows(), RatVector(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      rows[i][j] = M(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < M.cols() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0)
        continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < M.cols(); ++j)
        rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::size_t> induced_order(std::span<const std::size_t> basis,
                                       std::size_t n) {
  std::vector<std::size_t> order(basis.begin(), basis.end());
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(basis.begin(), basis.end(), j) == basis.end())
      order.push_back(j);
  return order;
}

} // namespace

ColumnSelection select_basis_columns(const IntMatrix &A) {
  const std::size_t m = A.rows();
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < A.cols() && chosen.size() < m; ++j) {
    chosen.push_back(j);
    if (rank_of(A.select_columns(chosen)) < chosen.size())
      chosen.pop_back();
  }
  if (chosen.size() < m)
    throw Error(ErrorKind::RankDeficient, "A does not have full row rank");
  return {chosen, induced_order(chosen, A.cols())};
}

ColumnSelection make_column_selection(const IntMatrix &A,
                                      std::span<const std::size_t> basis) {
  if (basis.size() != A.rows())
    throw Error(ErrorKind::DimensionMismatch, "basis must name exactly m columns");
  std::vector<std::size_t> sorted(basis.begin(), basis.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::DimensionMismatch, "basis columns must be distinct");
  if (!sorted.empty() && sorted.back() >= A.cols())
    throw Error(ErrorKind::DimensionMismatch, "basis column out of range");
  std::vector<std::size_t> b(basis.begin(), basis.end());
  return {b, induced_order(b, A.cols())};
}

bool satisfies_equations(const IntMatrix &A, std::span<const Integer> b,
                         std::span<const Integer> x) {
  if (x.size() != A.cols() || b.size() != A.rows())
    throw Error(ErrorKind::DimensionMismatch, "A, b and x shapes differ");
  const IntVector Ax = A * x;
  return std::equal(Ax.begin(), Ax.end(), b.begin());
}

bool verify(const IntMatrix &A, std::span<const Integer> b,
            std::span<const Integer> x) {
  if (!satisfies_equations(A, b, x))
    return false;
  return std::all_of(x.begin(), x.end(),
                     [](const Integer &v) { return sgn(v) >= 0; });
}

DetailedSolve solve_detailed(const ProblemInstance &inst) {
  const IntMatrix &A = inst.A;
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (m == 0 || m >= n)
    throw Error(ErrorKind::DimensionMismatch, "need 0 < m < n");
  if (inst.b.size() != m)
    throw Error(ErrorKind::DimensionMismatch, "b has wrong length");

  DetailedSolve out;
  SolveTrace &tr = out.trace;
  tr.columns = inst.basis_cols ? make_column_selection(A, *inst.basis_cols)
                               : select_basis_columns(A);
  const IntMatrix Ap = A.select_columns(tr.columns.order);
  std::vector<std::size_t> first(m), rest(n - m);
  for (std::size_t i = 0; i < m; ++i)
    first[i] = i;
  for (std::size_t i = m; i < n; ++i)
    rest[i - m] = i;
  tr.B = Ap.select_columns(first);
  tr.N = Ap.select_columns(rest);
  tr.det_B = det_exact(tr.B);
  if (sgn(tr.det_B) == 0)
    throw Error(ErrorKind::Singular, "selected basis columns are singular");
  tr.gcd_A = gcd_max_minors(Ap);

  // Step 0: integer feasibility, with a particular solution and kernel basis.
  const auto rep = integer_solution_set(Ap, inst.b);
  const IntMatrix kernel =
      rep ? rep->kernel_basis
          : integer_solution_set(Ap, IntVector(m))->kernel_basis;

  // The projected kernel basis generates Lambda(A); its special basis fixes
  // the box.
  tr.lattice_basis = special_basis(project_drop_m(kernel, m));
  tr.lattice_det = lattice_determinant(*tr.lattice_basis);

  if (!rep) {
    out.outcome.status = SolveStatus::IntegerInfeasible;
    return out;
  }

  // Step 1: a point of Lambda(A, b).
  tr.z = project_drop_m(rep->particular, m);

  // Step 2: reduce z into the box of the special basis.
  const BoxReduction red = box_reduce(tr.lattice_basis->as_columns(), tr.z);
  const std::size_t d = n - m;
  tr.y.resize(d);
  tr.w.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!is_integer(red.w[i]) || !is_integer(red.y[i]))
      throw Error(ErrorKind::Internal, "box reduction left the integer lattice");
    tr.y[i] = red.y[i].get_num();
    tr.w[i] = red.w[i].get_num();
  }

  // Step 3: lift w back to S(A, b).
  IntVector rhs = inst.b;
  const IntVector Nw = tr.N * tr.w;
  for (std::size_t i = 0; i < m; ++i)
    rhs[i] -= Nw[i];
  const RatVector u = solve_rational(tr.B, rhs);
  tr.u.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_integer(u[i]))
      throw Error(ErrorKind::Internal, "lifted point is not integral");
    tr.u[i] = u[i].get_num();
  }

  IntVector x(n);
  for (std::size_t k = 0; k < m; ++k)
    x[tr.columns.order[k]] = tr.u[k];
  for (std::size_t k = m; k < n; ++k)
    x[tr.columns.order[k]] = tr.w[k - m];
  if (!satisfies_equations(A, inst.b, x))
    throw Error(ErrorKind::Internal, "solution fails A x = b");

  const bool nonneg = std::all_of(x.begin(), x.end(),
                                  [](const Integer &v) { return sgn(v) >= 0; });
  out.outcome.status =
      nonneg ? SolveStatus::Nonnegative : SolveStatus::IntegerOnly;
  out.outcome.x = std::move(x);
  out.outcome.report = deep_cone_condition(tr.B, tr.N, tr.gcd_A, inst.b);
  return out;
}

SolveOutcome solve(const ProblemInstance &inst) {
  return solve_detailed(inst).outcome;
}

} // namespace boxdioph
