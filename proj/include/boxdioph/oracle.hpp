#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boxdioph/exact_arith.hpp"

namespace boxdioph {

struct EnumerationBudget {
  /// Bound used for a variable that no nonnegative row constrains.
  std::int64_t per_var_bound = 50;
  std::uint64_t node_cap = 20'000'000;
};

enum class OracleStatus { Found, NoneWithinBounds, Exhausted };

struct OracleResult {
  OracleStatus status = OracleStatus::NoneWithinBounds;
  IntVector x;
  /// True when every variable bound came from a row with nonnegative entries,
  /// so NoneWithinBounds proves there is no nonnegative solution.
  bool conclusive = false;
  std::uint64_t nodes = 0;
};

/// Depth-first search for x >= 0 with A x = b. Meant for n <= 8 and small
/// entries; coefficients must fit in 64 bits.
OracleResult brute_force_solve(const IntMatrix &A, std::span<const Integer> b,
                               const EnumerationBudget &budget = {});

/// Every nonnegative solution within the derived bounds, in lexicographic
/// order. Throws CapExceeded when the node cap is hit.
std::vector<IntVector> brute_force_all(const IntMatrix &A,
                                       std::span<const Integer> b,
                                       const EnumerationBudget &budget = {});

} // namespace boxdioph
