#pragma once

#include <span>

#include "boxdioph/exact_arith.hpp"

namespace boxdioph {

/// f_1 = a_1, f_i = gcd(a_1, ..., a_i).
IntVector f_chain(std::span<const Integer> a);

/// Brauer's upper bound on the Frobenius number:
/// G(a) = sum_{i>=2} a_i f_{i-1} / f_i - sum_i a_i. Requires gcd(a) = 1.
Integer brauer_G(std::span<const Integer> a);

/// Default cap on the smallest entry for the residue-table oracle.
inline constexpr unsigned long kFrobeniusDpCap = 1'000'000;

/// Exact Frobenius number by shortest paths over residues modulo the smallest
/// entry. Test oracle; throws CapExceeded when the smallest entry exceeds cap.
/// Returns -1 when some entry equals 1.
Integer frobenius_number_dp(std::span<const Integer> a,
                            unsigned long cap = kFrobeniusDpCap);

/// Diagonal of the special basis of Lambda(a) with a_1 as the basis column:
/// [f_1/f_2, ..., f_{n-1}/f_n].
IntVector box_shape(std::span<const Integer> a);

} // namespace boxdioph
