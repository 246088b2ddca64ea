#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "boxdioph/solver.hpp"

namespace boxdioph {

using Json = nlohmann::ordered_json;

/// Instance files hold one object {m, n, A, b, basis_cols?}. A is row-major;
/// integers are decimal strings (plain JSON integers are accepted on input);
/// basis_cols are 1-based.
ProblemInstance parse_instance(std::string_view text);
ProblemInstance instance_from_json(const Json &j);
Json instance_to_json(const ProblemInstance &inst);

/// Dumps with a fixed layout so equal values give identical bytes.
std::string dump(const Json &j);

Json integer_array(std::span<const Integer> v);
IntVector parse_integer_array(const Json &j, std::string_view field);

Json report_to_json(const ConditionReport &report);

/// m = 1 block: Brauer bound and whether b exceeds it.
Json m1_summary(const ProblemInstance &inst);
/// m = 2 block for the given partition.
Json m2_summary(const IntMatrix &B, const IntMatrix &N,
                std::span<const Integer> b);

struct ResultOptions {
  std::optional<double> seconds; // emitted only when set
};

Json result_to_json(const ProblemInstance &inst, const DetailedSolve &solved,
                    const ResultOptions &opts = {});

/// Condition diagnostics without solving.
Json check_to_json(const ProblemInstance &inst);
/// Approximate bounds (labelled "approx") next to the exact thresholds.
Json bounds_to_json(const ProblemInstance &inst);
Json frobenius_to_json(std::span<const Integer> a);

enum class GenMode { Feasible, Deep, Boundary };

GenMode parse_gen_mode(std::string_view s);

struct GenOptions {
  std::size_t m = 1;
  std::size_t n = 3;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::Feasible;
  long max_entry = 20;
  bool positive = false;
  long max_multiplier = 5; // range of the random x >= 0 behind b
};

/// Deterministic in the options. The first m columns form a nonsingular B.
ProblemInstance generate_instance(const GenOptions &opts);

/// Smallest k >= 0 such that b + k * B * (1, ..., 1) passes the deep-cone
/// condition.
Integer deep_cone_shift(const IntMatrix &B, const IntMatrix &N,
                        const Integer &gcdA, std::span<const Integer> b);

} // namespace boxdioph
