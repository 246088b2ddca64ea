#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boxdioph/cone.hpp"
#include "boxdioph/exact_arith.hpp"
#include "boxdioph/lattice.hpp"

namespace boxdioph {

struct ProblemInstance {
  IntMatrix A;
  IntVector b;
  /// 0-based indices of the m columns forming B; greedy choice when empty.
  std::optional<std::vector<std::size_t>> basis_cols;
};

/// The m basis columns and the induced column order (basis first, then the
/// remaining columns in their original order).
struct ColumnSelection {
  std::vector<std::size_t> basis;
  std::vector<std::size_t> order;
};

/// Greedy leftmost choice of m linearly independent columns.
ColumnSelection select_basis_columns(const IntMatrix &A);

/// Validates a user-supplied basis and builds the induced order.
ColumnSelection make_column_selection(const IntMatrix &A,
                                      std::span<const std::size_t> basis);

std::size_t rank_of(const IntMatrix &M);

enum class SolveStatus { IntegerInfeasible, Nonnegative, IntegerOnly };

const char *to_string(SolveStatus status);

/// Result of the box-reduction algorithm. `x` is empty for IntegerInfeasible
/// and always satisfies A x = b otherwise. IntegerOnly means the algorithm's
/// integer solution has a negative entry; it does not mean that no
/// nonnegative solution exists.
struct SolveOutcome {
  SolveStatus status = SolveStatus::IntegerInfeasible;
  IntVector x;
  /// Deep-cone report for the chosen B; present whenever the system is
  /// integer feasible.
  std::optional<ConditionReport> report;
};

/// Intermediate quantities of one run, in the permuted coordinates (B | N).
struct SolveTrace {
  ColumnSelection columns;
  IntMatrix B;
  IntMatrix N;
  Integer det_B;
  Integer gcd_A;
  std::optional<SpecialBasis> lattice_basis; // special basis of Lambda(A)
  Integer lattice_det;
  IntVector z;  // projection of a particular solution
  IntVector y;  // lattice point removed by the box reduction
  IntVector w;  // z - y
  IntVector u;  // B^-1 (b - N w)
};

struct DetailedSolve {
  SolveOutcome outcome;
  SolveTrace trace;
};

SolveOutcome solve(const ProblemInstance &inst);
DetailedSolve solve_detailed(const ProblemInstance &inst);

/// A x = b exactly and x >= 0.
bool verify(const IntMatrix &A, std::span<const Integer> b,
            std::span<const Integer> x);

/// A x = b exactly, no sign requirement.
bool satisfies_equations(const IntMatrix &A, std::span<const Integer> b,
                         std::span<const Integer> x);

} // namespace boxdioph
