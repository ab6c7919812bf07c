#include <doctest.h>

#include "support.hpp"

using namespace salg;
using namespace salg::test;

TEST_SUITE("linear_solve") {

TEST_CASE("identity system has a unique solution") {
  const auto out = linear_solve<Q>(Mat::Identity(2, 2), el({3, 4}));
  REQUIRE(std::holds_alternative<Unique<Vec>>(out));
  CHECK(exactly_equal(std::get<Unique<Vec>>(out).solution, el({3, 4})));
}

TEST_CASE("underdetermined system is affine with normalized nullspace") {
  const auto out = linear_solve<Q>(mat(1, 2, {1, 1}), el({1}));
  REQUIRE(std::holds_alternative<Affine<Vec>>(out));
  const auto& a = std::get<Affine<Vec>>(out);
  CHECK(exactly_equal(a.particular, el({1, 0})));
  REQUIRE(a.nullspace.size() == 1);
  CHECK(exactly_equal(a.nullspace[0], el({-1, 1})));
}

TEST_CASE("contradictory system is inconsistent") {
  const auto out = linear_solve<Q>(mat(2, 1, {1, 1}), el({0, 1}));
  CHECK(std::holds_alternative<Inconsistent>(out));
}

TEST_CASE("shape mismatch") {
  CHECK_THROWS_AS(linear_solve<Q>(Mat::Identity(2, 2), el({1, 2, 3})), DimensionError);
}

TEST_CASE("degenerate shapes") {
  const auto zero_rows = linear_solve<Q>(Mat(0, 2), Vec(0));
  REQUIRE(std::holds_alternative<Affine<Vec>>(zero_rows));
  CHECK(std::get<Affine<Vec>>(zero_rows).nullspace.size() == 2);
  const auto zero_matrix = linear_solve<Q>(Mat::Zero(2, 2), el({0, 1}));
  CHECK(std::holds_alternative<Inconsistent>(zero_matrix));
}

TEST_CASE("random systems agree with the naive elimination oracle") {
  Sampler s(11);
  for (int t = 0; t < 200; ++t) {
    const Index rows = s.integer(1, 6), cols = s.integer(1, 6);
    Mat m = s.matrix<Q>(rows, cols);
    // make rank deficiency common
    if (rows > 1 && s.integer(0, 1)) m.row(rows - 1) = m.row(0) * s.scalar<Q>();
    if (cols > 1 && s.integer(0, 1)) m.col(cols - 1) = m.col(0) - m.col(cols - 2);
    Vec rhs = s.integer(0, 1) ? Vec(m * s.vector<Q>(cols)) : s.vector<Q>(rows);

    const Index r = naive_rank(m);
    Mat aug(rows, cols + 1);
    aug.leftCols(cols) = m;
    aug.col(cols) = rhs;
    const bool consistent = naive_rank(aug) == r;
    CHECK(rank(m) == r);

    const auto out = linear_solve(m, rhs);
    if (!consistent) {
      CHECK(std::holds_alternative<Inconsistent>(out));
    } else if (r == cols) {
      REQUIRE(std::holds_alternative<Unique<Vec>>(out));
      CHECK(exactly_equal(Vec(m * std::get<Unique<Vec>>(out).solution), rhs));
    } else {
      REQUIRE(std::holds_alternative<Affine<Vec>>(out));
      const auto& a = std::get<Affine<Vec>>(out);
      CHECK(exactly_equal(Vec(m * a.particular), rhs));
      CHECK(static_cast<Index>(a.nullspace.size()) == cols - r);
      Mat null(cols, static_cast<Index>(a.nullspace.size()));
      for (std::size_t i = 0; i < a.nullspace.size(); ++i) {
        CHECK(is_zero(Vec(m * a.nullspace[i])));
        null.col(static_cast<Index>(i)) = a.nullspace[i];
      }
      CHECK(naive_rank(null) == cols - r);
    }
  }
}

TEST_CASE("inverse") {
  Sampler s(3);
  for (int t = 0; t < 30; ++t) {
    const Mat p = s.invertible<Q>(4);
    const auto q = try_inverse(p);
    REQUIRE(q.has_value());
    CHECK(exactly_equal(Mat(p * *q), Mat::Identity(4, 4)));
  }
  CHECK_FALSE(try_inverse<Q>(mat(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("subspace membership, sums and canonical equality") {
  const auto a = Subspace<Q>::span({el({1, 1, 0}), el({2, 2, 0})}, 3);
  CHECK(a.dim() == 1);
  CHECK(a.contains(el({-3, -3, 0})));
  CHECK_FALSE(a.contains(el({1, 0, 0})));
  const auto b = Subspace<Q>::span({el({0, 0, 5})}, 3);
  const auto sum = a + b;
  CHECK(sum.dim() == 2);
  CHECK(sum == Subspace<Q>::span({el({1, 1, 1}), el({1, 1, -1})}, 3));
  CHECK(sum.contains(a));
  CHECK_FALSE(a.contains(sum));
  CHECK(Subspace<Q>::whole(3).dim() == 3);
  CHECK(Subspace<Q>(3).dim() == 0);
}

}  // TEST_SUITE
