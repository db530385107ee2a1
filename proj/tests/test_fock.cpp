#include <gtest/gtest.h>

#include <random>

#include "tetra/threedim_r/r_matrix.hpp"

using namespace tetra;

namespace {
std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}
}  // namespace

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing(0, 0), Scalar(1));
  EXPECT_EQ(pairing(1, 1), Scalar(LaurentPoly(1) - LaurentPoly::q_pow(2)));
  EXPECT_EQ(pairing(1, 2), Scalar());
}

TEST(Pairing, Diagonal) {
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n) {
      if (m != n) EXPECT_TRUE(pairing(m, n).is_zero());
      else EXPECT_FALSE(pairing(m, n).is_zero());
    }
}

TEST(Sector, Examples) {
  EXPECT_EQ(enumerate_sector(2, {.weight = 1}), (std::vector<MultiIndex>{{0, 1}, {1, 0}}));
  EXPECT_EQ(enumerate_sector(1, {.parity = 1, .max_degree = 3}), (std::vector<MultiIndex>{{1}, {3}}));
  EXPECT_EQ(enumerate_sector(3, {.weight = 2}).size(), 6U);
  EXPECT_THROW(enumerate_sector(2, {.parity = 0}), std::invalid_argument);
}

TEST(Sector, CountsMatchMultisetFormula) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int w = 0; w <= 6; ++w) {
      auto s = enumerate_sector(n, {.weight = w});
      EXPECT_EQ(s.size(), binom(static_cast<std::size_t>(w) + n - 1, n - 1));
      EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
      EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
      EXPECT_EQ(enumerate_sector(n, {.max_degree = w}).size(), binom(static_cast<std::size_t>(w) + n, n));
    }
}

TEST(Operator, IdentityAndR) {
  State s({2, 0, 1}, Scalar::q_pow(3));
  s.add({0, 0, 0}, Scalar(5));
  EXPECT_EQ(apply_operator(identity_operator<Scalar>(), s), s);
  State vac({0, 0, 0}, Scalar(1));
  EXPECT_EQ(apply_operator(r_operator(), vac), vac);
}

TEST(Operator, ConservationViolationIsAnError) {
  GradedOperator<Scalar> bad{[](const MultiIndex& m) {
                               MultiIndex o = m;
                               o[0] += 1;
                               return State(o, Scalar(1));
                             },
                             {{{1, 1}, "total"}},
                             "bad"};
  EXPECT_THROW(apply_operator(bad, State({0, 0}, Scalar(1))), ConservationViolation);
}

TEST(Operator, Linearity) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> lvl(0, 2);
  std::uniform_int_distribution<int> ex(-2, 2);
  auto op = r_operator();
  for (int trial = 0; trial < 20; ++trial) {
    State u;
    State v;
    for (int t = 0; t < 3; ++t) {
      u.add({lvl(rng), lvl(rng), lvl(rng)}, Scalar::q_pow(ex(rng)));
      v.add({lvl(rng), lvl(rng), lvl(rng)}, Scalar(ex(rng)));
    }
    Scalar alpha = Scalar::fraction(LaurentPoly::q_pow(1), LaurentPoly(1) - LaurentPoly::q_pow(2));
    Scalar beta = Scalar(GaussianRational::i());
    State comb = alpha * u + beta * v;
    EXPECT_EQ(apply_operator(op, comb), alpha * apply_operator(op, u) + beta * apply_operator(op, v));
  }
}
