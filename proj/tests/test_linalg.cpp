#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "triplex/linalg.hpp"

using namespace triplex;

namespace {

Rational rnd_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Rational r(num(rng));
  return r / den(rng);
}

Mat rnd_mat(std::mt19937& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rnd_rat(rng);
  return m;
}

Mat unit_mat(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1;
  return m;
}

}  // namespace

TEST_CASE("rank: identity, zero, proportional rows") {
  CHECK(rank(Mat::Identity(3, 3)) == 3);
  CHECK(rank(Mat::Zero(4, 4)) == 0);
  Mat m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  CHECK(rank(m) == 1);
}

TEST_CASE("rank equals rank of the transpose") {
  std::mt19937 rng(7);
  for (int t = 0; t < 12; ++t) {
    Mat m = rnd_mat(rng, 4, 6);
    // plant some dependencies
    if (t % 2 == 0) m.row(2) = m.row(0) + m.row(1);
    if (t % 3 == 0) m.col(5).setZero();
    CHECK(rank(m) == rank(Mat(m.transpose())));
  }
}

TEST_CASE("rank is exact on near-degenerate fractions") {
  // rows proportional by 3/7: floating point would need a tolerance here
  Mat m(2, 3);
  m(0, 0) = Rational(1) / 3;
  m(0, 1) = Rational(2) / 7;
  m(0, 2) = Rational(5) / 11;
  m.row(1) = (Rational(3) / 7) * m.row(0);
  CHECK(rank(m) == 1);
}

TEST_CASE("solve_in_span: scalar multiple, empty basis, independent units") {
  Mat eye = Mat::Identity(3, 3);
  auto c = solve_in_span({eye}, Mat(3 * eye));
  REQUIRE(c.has_value());
  REQUIRE(c->size() == 1);
  CHECK((*c)[0] == 3);

  auto empty = solve_in_span({}, Mat::Zero(2, 2));
  REQUIRE(empty.has_value());
  CHECK(empty->empty());

  CHECK_FALSE(solve_in_span({}, Mat(eye)).has_value());
  CHECK_FALSE(solve_in_span({unit_mat(2, 0, 0)}, unit_mat(2, 0, 1)).has_value());
}

TEST_CASE("solve_in_span round-trips exactly") {
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    std::vector<Mat> basis;
    for (int i = 0; i < 5; ++i) basis.push_back(rnd_mat(rng, 3, 3));
    basis.push_back(basis[0] + basis[1]);  // a dependent member
    Mat target = Mat::Zero(3, 3);
    for (const Mat& b : basis) target += rnd_rat(rng) * b;

    auto c = solve_in_span(basis, target);
    REQUIRE(c.has_value());
    REQUIRE(c->size() == basis.size());
    Mat back = Mat::Zero(3, 3);
    for (std::size_t i = 0; i < basis.size(); ++i) back += (*c)[i] * basis[i];
    CHECK(exact_eq(back, target));
  }
}

TEST_CASE("solve_in_span rejects mixed shapes") {
  CHECK_THROWS_AS(solve_in_span({Mat::Identity(2, 2)}, Mat::Identity(3, 3)),
                  DimensionMismatch);
}

TEST_CASE("gauss_select: dependent, zero and full cases") {
  Mat eye = Mat::Identity(2, 2);
  CHECK(gauss_select({eye, Mat(2 * eye), unit_mat(2, 0, 1)}) == std::vector<int>{0, 2});
  CHECK(gauss_select({Mat::Zero(2, 2), eye}) == std::vector<int>{1});

  std::vector<Mat> units;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) units.push_back(unit_mat(3, i, j));
  std::vector<int> all(9);
  for (int i = 0; i < 9; ++i) all[static_cast<std::size_t>(i)] = i;
  CHECK(gauss_select(units) == all);
}

TEST_CASE("gauss_select size equals the rank of the stacked candidates") {
  std::mt19937 rng(23);
  for (int t = 0; t < 10; ++t) {
    std::vector<Mat> cand;
    for (int i = 0; i < 7; ++i) cand.push_back(rnd_mat(rng, 2, 3));
    cand.push_back(cand[2] - cand[4]);
    Mat stacked(static_cast<int>(cand.size()), 6);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      stacked.row(static_cast<int>(i)) = flatten(cand[i]).transpose();
    }
    CHECK(static_cast<int>(gauss_select(cand).size()) == rank(stacked));
  }
}

TEST_CASE("Tensor3 indexing and column view") {
  Tensor3 t(3);
  t(2, 0, 1, 2) = Rational(5) / 2;
  t(0, 0, 1, 2) = -1;
  auto col = t.column(0, 1, 2);
  CHECK(col[0] == -1);
  CHECK(col[1] == 0);
  CHECK(col[2] == Rational(5) / 2);

  Tensor3 u(3);
  u(2, 0, 1, 2) = Rational(5) / 2;
  u(0, 0, 1, 2) = -1;
  CHECK(t == u);
  u(1, 1, 1, 1) = 1;
  CHECK_FALSE(t == u);
}

TEST_CASE("SpanSolver insists on one vector length") {
  SpanSolver s;
  Vec a(2);
  a[0] = 1;
  a[1] = 0;
  CHECK(s.insert(a));
  Vec b(3);
  b.setZero();
  CHECK_THROWS_AS(s.insert(b), DimensionMismatch);
}
