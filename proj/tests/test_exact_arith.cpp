#include "doctest.h"

#include "boxdioph/exact_arith.hpp"
#include "support.hpp"

using namespace boxdioph;
using boxdioph::testing::cofactor_det;
using boxdioph::testing::gcd_of_minors_by_enumeration;
using boxdioph::testing::random_matrix;

namespace {

void check_hnf_shape(const IntMatrix &M, const HnfResult &r) {
  REQUIRE(M * r.U == r.H);
  CHECK(abs(det_exact(r.U)) == 1);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    CHECK(r.H(i, i) > 0);
    for (std::size_t j = i + 1; j < M.cols(); ++j)
      CHECK(r.H(i, j) == 0);
    for (std::size_t j = 0; j < i; ++j) {
      CHECK(r.H(i, j) >= 0);
      CHECK(r.H(i, j) < r.H(i, i));
    }
  }
}

} // namespace

TEST_CASE("hnf_column examples") {
  SUBCASE("identity is already reduced") {
    const auto r = hnf_column(IntMatrix::identity(2));
    CHECK(r.H == IntMatrix::identity(2));
    CHECK(r.U == IntMatrix::identity(2));
  }
  SUBCASE("single row (2 3)") {
    const auto r = hnf_column(IntMatrix{{2, 3}});
    CHECK(r.H == IntMatrix{{1, 0}});
    CHECK(r.U == IntMatrix{{-1, 3}, {1, -2}});
    CHECK(det_exact(r.U) == -1);
  }
  SUBCASE("positive diagonal") {
    const IntMatrix D{{2, 0}, {0, 3}};
    const auto r = hnf_column(D);
    CHECK(r.H == D);
    CHECK(r.U == IntMatrix::identity(2));
  }
  SUBCASE("negative pivots and reduction") {
    const IntMatrix M{{-4, 6, 2}, {3, 5, -7}};
    check_hnf_shape(M, hnf_column(M));
  }
}

TEST_CASE("hnf_column rejects rank deficiency") {
  CHECK_THROWS_AS(hnf_column(IntMatrix{{1, 2, 3}, {2, 4, 6}}), Error);
  try {
    hnf_column(IntMatrix{{0, 0}, {1, 1}});
    FAIL("expected RankDeficient");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::RankDeficient);
  }
}

TEST_CASE("hnf_column is canonical under unimodular changes") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const IntMatrix M = random_matrix(rng, 2, 4, -30, 30);
    HnfResult r1;
    try {
      r1 = hnf_column(M);
    } catch (const Error &) {
      continue;
    }
    // Right-multiplying by a unimodular matrix keeps the column lattice.
    const IntMatrix V = boxdioph::testing::random_unimodular(rng, 4);
    const auto r2 = hnf_column(M * V);
    CHECK(r1.H == r2.H);
  }
}

TEST_CASE("det_exact examples and cofactor agreement") {
  CHECK(det_exact(IntMatrix::identity(3)) == 1);
  CHECK(det_exact(IntMatrix{{2, 1}, {1, 2}}) == 3);
  CHECK(det_exact(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(det_exact(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK_THROWS_AS(det_exact(IntMatrix{{1, 2, 3}}), Error);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t d = 1 + t % 4;
    const IntMatrix M = random_matrix(rng, d, d, -9, 9);
    CHECK(det_exact(M) == cofactor_det(M));
  }
}

TEST_CASE("gcd_max_minors examples") {
  CHECK(gcd_max_minors(IntMatrix{{2, 0, 1}, {0, 2, 1}}) == 2);
  CHECK(gcd_max_minors(IntMatrix{{5, 2, 3}}) == 1);
  CHECK(gcd_max_minors(IntMatrix{{1, 0, 17}, {0, 1, -4}}) == 1);
  CHECK(gcd_max_minors(IntMatrix{{3, 0, 1}, {0, 3, 1}}) == 3);
}

TEST_CASE("gcd_max_minors matches minor enumeration") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + t % 3;
    const std::size_t n = m + 1 + t % 4;
    const IntMatrix A = random_matrix(rng, m, n, -12, 12);
    const Integer oracle = gcd_of_minors_by_enumeration(A);
    if (oracle == 0) {
      CHECK_THROWS_AS(gcd_max_minors(A), Error);
      continue;
    }
    CHECK(gcd_max_minors(A) == oracle);
  }
}

TEST_CASE("solve_rational examples") {
  const auto v = make_int_vector({4, -7});
  const auto x = solve_rational(IntMatrix::identity(2), v);
  CHECK(x[0] == 4);
  CHECK(x[1] == -7);

  const auto y = solve_rational(IntMatrix{{2, 0}, {0, 4}}, make_int_vector({1, 2}));
  CHECK(y[0] == Rational(1, 2));
  CHECK(y[1] == Rational(1, 2));

  const auto z = solve_rational(IntMatrix{{1, 1}, {0, 1}}, make_int_vector({3, 1}));
  CHECK(z[0] == 2);
  CHECK(z[1] == 1);

  CHECK_THROWS_AS(solve_rational(IntMatrix{{1, 2}, {2, 4}}, make_int_vector({1, 1})),
                  Error);
}

TEST_CASE("solve_rational inverts B x for random integer x") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + t % 4;
    const IntMatrix B = random_matrix(rng, d, d, -10, 10);
    if (det_exact(B) == 0)
      continue;
    const IntVector x = boxdioph::testing::random_vector(rng, d, -50, 50);
    const RatVector got = solve_rational(B, B * x);
    for (std::size_t i = 0; i < d; ++i)
      CHECK(got[i] == x[i]);
  }
}

TEST_CASE("rational helpers") {
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(ceil_of(Rational(-7, 2)) == -3);
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(make_rational(6, -4).get_den() == 2);
  CHECK(is_integer(make_rational(8, 4)));
}
