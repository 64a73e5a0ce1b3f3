#include <gtest/gtest.h>

#include <random>

#include "frobenia/matrix.hpp"
#include "oracles.hpp"

using namespace frobenia;

namespace {

Mat random_mat(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (zero_bias && static_cast<int>(rng() % 10) < zero_bias) continue;
      m(i, j) = f.from_int(static_cast<long>(rng() % 11) - 5);
    }
  return m;
}

}  // namespace

TEST(Matlin, IdentityAndInvolution) {
  Field Q = Field::rationals();
  std::mt19937_64 rng(1);
  Mat A = random_mat(Q, 3, 3, rng);
  EXPECT_EQ(Mat::identity(Q, 3) * A, A);
  Mat s = Mat::from_ints(Q, {{0, 1}, {1, 0}});
  EXPECT_TRUE((s * s).is_identity());
}

TEST(Matlin, Associativity) {
  std::mt19937_64 rng(2);
  for (const Field& f : {Field::rationals(), Field::prime(7), Field::cyclotomic(3)}) {
    Mat A = random_mat(f, 3, 4, rng), B = random_mat(f, 4, 2, rng), C = random_mat(f, 2, 5, rng);
    EXPECT_EQ((A * B) * C, A * (B * C));
  }
}

TEST(Matlin, Block) {
  Field Q = Field::rationals();
  Mat A = Mat::from_ints(Q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  EXPECT_EQ(A.block(1, 2, 0, 1), Mat::from_ints(Q, {{4}, {7}}));
}

TEST(Matlin, RrefExamples) {
  Field Q = Field::rationals();
  auto z = rref(Mat(Q, 2, 2));
  EXPECT_EQ(z.rank, 0u);
  auto r = rref(Mat::from_ints(Q, {{2, 4}, {1, 2}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
  EXPECT_EQ(r.R, Mat::from_ints(Q, {{1, 2}, {0, 0}}));
  EXPECT_EQ(r.transform * Mat::from_ints(Q, {{2, 4}, {1, 2}}), r.R);
}

TEST(Matlin, RrefTransformInvertsFullRank) {
  std::mt19937_64 rng(5);
  Field Q = Field::rationals();
  for (int t = 0; t < 20; ++t) {
    Mat A = random_mat(Q, 4, 4, rng);
    auto r = rref(A);
    EXPECT_EQ(r.transform * A, r.R);
    if (r.rank == 4) EXPECT_TRUE((r.transform * A).is_identity());
  }
}

TEST(Matlin, KernelExamples) {
  Field Q = Field::rationals();
  EXPECT_EQ(kernel(Mat::identity(Q, 3)).rows(), 0u);
  Field F2 = Field::prime(2);
  Mat k = kernel(Mat::from_ints(F2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(k, Mat::from_ints(F2, {{1, 1}}));
  auto x = solve(Mat::from_ints(Q, {{2}}), Mat::from_ints(Q, {{1}}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)(0, 0), Q.parse("1/2"));
  EXPECT_FALSE(solve(Mat::from_ints(Q, {{1, 1}, {1, 1}}), Mat::from_ints(Q, {{1}, {2}})).has_value());
}

TEST(Matlin, RankNullityAndSolve) {
  std::mt19937_64 rng(9);
  for (const Field& f : {Field::rationals(), Field::prime(3), Field::extension(2, {1, 1, 1}), Field::cyclotomic(4)}) {
    for (int t = 0; t < 15; ++t) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      Mat A = random_mat(f, r, c, rng, 5);
      Mat K = kernel(A);
      EXPECT_EQ(rank(A) + K.rows(), A.rows());
      EXPECT_TRUE((K * A).is_zero());
      Mat x0 = random_mat(f, c, 2, rng);
      Mat b = A * x0;
      auto x = solve(A, b);
      ASSERT_TRUE(x.has_value());
      EXPECT_EQ(A * *x, b);
      Mat y0 = random_mat(f, 2, r, rng);
      auto y = solve_left(A, y0 * A);
      ASSERT_TRUE(y.has_value());
      EXPECT_EQ(*y * A, y0 * A);
    }
  }
}

TEST(Matlin, Inverse) {
  std::mt19937_64 rng(11);
  Field Q = Field::rationals();
  int inverted = 0;
  for (int t = 0; t < 20; ++t) {
    Mat A = random_mat(Q, 4, 4, rng);
    try {
      Mat B = inverse(A);
      EXPECT_TRUE((B * A).is_identity());
      EXPECT_FALSE(determinant(A).is_zero());
      ++inverted;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::Singular);
      EXPECT_TRUE(determinant(A).is_zero());
    }
  }
  EXPECT_GT(inverted, 0);
  EXPECT_THROW(inverse(Mat::from_ints(Q, {{1, 2}, {2, 4}})), Error);
}

TEST(Matlin, MinPolyExamples) {
  Field Q = Field::rationals();
  EXPECT_EQ(min_poly(Mat::identity(Q, 2)), Poly::from_ints(Q, {-1, 1}));
  EXPECT_EQ(min_poly(Mat::from_ints(Q, {{0, 1}, {0, 0}})), Poly::from_ints(Q, {0, 0, 1}));
  // right multiplication by T_s on (T_1, T_s) at v = i: T_s^2 = T_1 + 2i T_s
  Field K = Field::cyclotomic(4);
  Scalar i = K.generator();
  Mat Ts = Mat::from_rows(K, {{K.zero(), K.one()}, {K.one(), K.from_int(2) * i}}, 2);
  Poly want = Poly(K, {-i, K.one()}) * Poly(K, {-i, K.one()});
  EXPECT_EQ(min_poly(Ts), want);
}

TEST(Matlin, MinPolyDividesCharPoly) {
  std::mt19937_64 rng(13);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(5), Field::cyclotomic(3)}) {
    for (int t = 0; t < 12; ++t) {
      const std::size_t n = 1 + rng() % 5;
      Mat A = random_mat(f, n, n, rng, 6);
      if (t % 3 == 0) A = A * A;  // more repeated structure
      Poly mp = min_poly(A);
      Poly cp = oracle::char_poly_expansion(A);
      EXPECT_TRUE((cp % mp).is_zero()) << A.to_string();
      EXPECT_TRUE(eval_poly(mp, A).is_zero());
      // no proper divisor annihilates: check each maximal divisor mp / q
      if (f.is_finite()) {
        for (auto& pf : factor(mp)) EXPECT_FALSE(eval_poly(mp / pf.poly, A).is_zero());
      }
    }
  }
}
