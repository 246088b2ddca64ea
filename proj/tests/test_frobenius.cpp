#include "doctest.h"

#include "boxdioph/frobenius.hpp"
#include "boxdioph/solver.hpp"
#include "support.hpp"

using namespace boxdioph;

namespace {

IntVector ints(std::initializer_list<long> v) { return make_int_vector(v); }

std::vector<long> to_longs(const IntVector &v) {
  std::vector<long> out;
  for (const auto &x : v)
    out.push_back(x.get_si());
  return out;
}

} // namespace

TEST_CASE("f_chain and brauer_G examples") {
  CHECK(f_chain(ints({6, 10, 15})) == ints({6, 2, 1}));
  CHECK(brauer_G(ints({3, 5})) == 7);
  CHECK(brauer_G(ints({6, 10, 15})) == 29);
  CHECK(brauer_G(ints({4, 6, 9})) == 6 * 2 + 9 * 2 - 19);
  CHECK_THROWS_AS(brauer_G(ints({4, 6})), Error);
  CHECK_THROWS_AS(brauer_G(ints({4, 0, 3})), Error);
}

TEST_CASE("frobenius_number_dp examples") {
  CHECK(frobenius_number_dp(ints({3, 5})) == 7);
  CHECK(frobenius_number_dp(ints({6, 10, 15})) == 29);
  CHECK(frobenius_number_dp(ints({1, 7})) == -1);
  CHECK(frobenius_number_dp(ints({4, 6, 9})) == 11);
  CHECK_THROWS_AS(frobenius_number_dp(ints({4, 6})), Error);
  try {
    frobenius_number_dp(ints({2000, 2001}), 1000);
    FAIL("expected CapExceeded");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("box_shape examples") {
  CHECK(box_shape(ints({3, 5})) == ints({3}));
  CHECK(box_shape(ints({6, 10, 15})) == ints({3, 2}));
  CHECK(box_shape(ints({5, 2, 3})) == ints({5, 1}));
}

TEST_CASE("DP agrees with the coin table and stays below G") {
  std::mt19937_64 rng(31);
  int done = 0;
  while (done < 300) {
    const std::size_t n = 2 + done % 3;
    IntVector a = boxdioph::testing::random_vector(rng, n, 1, 40);
    Integer g = 0;
    for (const auto &x : a)
      g = gcd(g, x);
    if (g != 1)
      continue;
    const Integer G = brauer_G(a);
    const Integer F = frobenius_number_dp(a);
    CHECK(F <= G);
    const long limit = std::max(0L, G.get_si()) + 50;
    CHECK(F == boxdioph::testing::frobenius_by_coin_table(to_longs(a), limit));
    ++done;
  }
}

TEST_CASE("box_shape equals the special-basis diagonal of the solver") {
  std::mt19937_64 rng(37);
  int done = 0;
  while (done < 200) {
    const std::size_t n = 2 + done % 4;
    IntVector a = boxdioph::testing::random_vector(rng, n, 1, 50);
    IntMatrix A(1, n);
    for (std::size_t j = 0; j < n; ++j)
      A(0, j) = a[j];
    const std::vector<std::size_t> first{0};
    const auto d = solve_detailed({A, IntVector{Integer(0)}, first});
    REQUIRE(d.trace.lattice_basis);
    CHECK(d.trace.lattice_basis->diagonal() == box_shape(a));
    ++done;
  }
}

TEST_CASE("reduced points land in the first layer above b") {
  // For m = 1 the reduced x_N satisfies sum a_i x_i = b mod a_1 and
  // sum a_i x_i <= G + a_1.
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 300) {
    const std::size_t n = 2 + done % 4;
    IntVector a = boxdioph::testing::random_vector(rng, n, 1, 30);
    Integer g = 0;
    for (const auto &x : a)
      g = gcd(g, x);
    if (g != 1)
      continue;
    IntMatrix A(1, n);
    for (std::size_t j = 0; j < n; ++j)
      A(0, j) = a[j];
    const Integer G = brauer_G(a);
    const Integer b = G + 1 + boxdioph::testing::uniform(rng, 0, 100);
    const std::vector<std::size_t> first{0};
    const auto d = solve_detailed({A, IntVector{b}, first});
    CHECK(d.outcome.status == SolveStatus::Nonnegative);
    Integer s = 0;
    for (std::size_t j = 1; j < n; ++j)
      s += a[j] * d.outcome.x[j];
    CHECK((s - b) % a[0] == 0);
    CHECK(s <= G + a[0]);
    ++done;
  }
}
