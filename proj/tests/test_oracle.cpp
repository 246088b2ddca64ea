#include "doctest.h"

#include "boxdioph/oracle.hpp"
#include "boxdioph/solver.hpp"
#include "support.hpp"

using namespace boxdioph;

TEST_CASE("brute_force_solve examples") {
  const IntMatrix A{{2, 3}};
  const auto r = brute_force_solve(A, make_int_vector({7}));
  CHECK(r.status == OracleStatus::Found);
  CHECK(r.x == make_int_vector({2, 1}));
  CHECK(r.conclusive);

  const auto none = brute_force_solve(A, make_int_vector({1}));
  CHECK(none.status == OracleStatus::NoneWithinBounds);
  CHECK(none.conclusive);

  const auto zero = brute_force_solve(A, make_int_vector({0}));
  CHECK(zero.status == OracleStatus::Found);
  CHECK(zero.x == make_int_vector({0, 0}));
}

TEST_CASE("brute_force_all enumerates every solution") {
  const IntMatrix A{{1, 0, 1}, {0, 1, 1}};
  const auto all = brute_force_all(A, make_int_vector({2, 2}));
  REQUIRE(all.size() == 3);
  CHECK(all[0] == make_int_vector({0, 0, 2}));
  CHECK(all[1] == make_int_vector({1, 1, 1}));
  CHECK(all[2] == make_int_vector({2, 2, 0}));
}

TEST_CASE("mixed signs are searched within the fallback bound") {
  const IntMatrix A{{1, -1}};
  const auto r = brute_force_solve(A, make_int_vector({3}));
  CHECK(r.status == OracleStatus::Found);
  CHECK(verify(A, make_int_vector({3}), r.x));
  CHECK_FALSE(r.conclusive);

  const auto miss = brute_force_solve(A, make_int_vector({80}),
                                      EnumerationBudget{10, 1'000'000});
  CHECK(miss.status == OracleStatus::NoneWithinBounds);
  CHECK_FALSE(miss.conclusive);
}

TEST_CASE("node cap") {
  const IntMatrix A{{1, 1, 1, 1, 1, 1}};
  const auto r = brute_force_solve(A, make_int_vector({1000}),
                                   EnumerationBudget{50, 100});
  // a solution is reachable quickly along the first branch
  CHECK(r.status != OracleStatus::NoneWithinBounds);
  CHECK_THROWS_AS(brute_force_all(A, make_int_vector({40}),
                                  EnumerationBudget{50, 100}),
                  Error);
}

TEST_CASE("oracle solutions verify on random positive instances") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + t % 2;
    const std::size_t n = m + 1 + t % 3;
    const IntMatrix A = boxdioph::testing::random_matrix(rng, m, n, 1, 9);
    const IntVector b = boxdioph::testing::random_vector(rng, m, 0, 40);
    const auto r = brute_force_solve(A, b);
    CHECK(r.conclusive);
    if (r.status == OracleStatus::Found)
      CHECK(verify(A, b, r.x));
  }
}
