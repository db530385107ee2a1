#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "tetra/reduction.hpp"

using namespace tetra;
using fixtures::qs;

TEST(Rho, Examples) {
  const int n = 6;
  Series r11 = rho_normalizer(1, 1, 1, n);
  EXPECT_EQ(r11.coeff(0), Scalar(1));
  // (z;q)_inf = 1 - z/(1-q) + ..., (-zq;q)_inf = 1 + zq/(1-q) + ...
  EXPECT_EQ(r11.coeff(1), Scalar::fraction(-(LaurentPoly(1) + LaurentPoly::q_pow(1)), LaurentPoly(1) - LaurentPoly::q_pow(1)));
  EXPECT_EQ(rho_normalizer(2, 2, -1, n) * rho_normalizer(2, 2, 1, n), Series(Scalar(1), n));
  EXPECT_EQ(rho_normalizer(SSpec{.s = 2, .t = 2, .parity = std::pair{-1, 1}}), rho_normalizer(2, 2, -1, 8));
  // rho^{1,2} only involves even powers of z
  Series r12 = rho_normalizer(1, 2, 1, n);
  for (int k = 1; k <= n; k += 2) EXPECT_TRUE(r12.coeff(k).is_zero());
}

TEST(SElement, ClosedForms) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& f : fixtures::s_fixtures(n, 8, 2)) {
      Series got = s_element(f.spec, f.a, f.b, f.i, f.j);
      EXPECT_EQ(got, f.expect) << "n=" << n << " " << f.name << "\n got " << got << "\n want " << f.expect;
    }
  }
}

TEST(SElement, RankOneExample) {
  const int N = 8;
  SSpec spec{.s = 1, .t = 1, .n = 1, .order = N};
  const Series f = fixtures::s11_two_e1_display(N);
  Series got = s_element(spec, {2}, {0}, {1}, {1});
  // c1 = c0 - 1 forces c0 >= 1: the element is z f, not f
  EXPECT_TRUE(got.coeff(0).is_zero());
  EXPECT_NE(got, f);
  EXPECT_EQ(got, f.shifted(1));
  EXPECT_EQ(s_element(spec, {0}, {2}, {1}, {1}), -qs(1) * f);
  // consistent with the reversal relation: S^{2,0}_{1,1} = z (1-q^2)^2/(q^2;q^2)_2 S^{1,1}_{2,0}
  Series rev = s_element(spec, {1}, {1}, {2}, {0});
  EXPECT_EQ(got, (Scalar::fraction(poch_poly(4, 4, 1) * poch_poly(4, 4, 1), poch_poly(4, 4, 2)) * rev).shifted(1));
  for (int k = 0; k <= N; ++k) EXPECT_TRUE(got.coeff(k).is_laurent());
}

TEST(SElement, ConservationAndParity) {
  for (int s = 1; s <= 2; ++s)
    for (int t = 1; t <= 2; ++t) {
      SSpec spec{.s = s, .t = t, .n = 2, .order = 4};
      auto labels = enumerate_sector(2, {.max_degree = 2});
      for (const auto& a : labels)
        for (const auto& b : labels)
          for (const auto& i : labels)
            for (const auto& j : labels) {
              Series v = s_element(spec, a, b, i, j);
              if (v.is_zero()) continue;
              for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(a[r] + b[r], i[r] + j[r]);
              if (s == 2 && t == 2) {
                EXPECT_EQ((weight(a) - weight(i)) % 2, 0);
                EXPECT_EQ((weight(b) - weight(j)) % 2, 0);
              }
            }
    }
  EXPECT_THROW(s_element(SSpec{.n = 2}, {0}, {0, 0}, {0, 0}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(SSpec({.s = 1, .t = 2, .parity = std::pair{1, 1}}).validate(), std::invalid_argument);
}

TEST(SElement, BlockDecomposition) {
  const int N = 5;
  SSpec full{.s = 2, .t = 2, .n = 2, .order = N};
  auto labels = enumerate_sector(4, {.max_degree = 3});
  for (const auto& ij : labels) {
    PairOperator whole = s_operator(full);
    VectorState<Series> sum;
    for (int e1 : {1, -1})
      for (int e2 : {1, -1}) {
        SSpec blk = full;
        blk.parity = std::pair{e1, e2};
        sum += s_operator(blk).apply(ij);
      }
    EXPECT_EQ(whole.apply(ij), sum) << to_string(ij);
  }
}

TEST(SMatrix, SectorTable) {
  SSpec spec{.s = 1, .t = 1, .n = 1, .order = 4};
  auto m = s_matrix(spec, {.weight = 2});
  EXPECT_EQ(m.size(), 3U);
  const auto& col = m.at({1, 1});
  EXPECT_EQ(col.size(), 3U);
  EXPECT_TRUE(col.coeff({3, 0}).is_zero());
  auto op = s_operator(spec).as_operator();
  EXPECT_EQ(apply_operator(op, VectorState<Series>({1, 1}, Series(Scalar(1), 4))), col);
}

TEST(SYbe, LowSectors) {
  EXPECT_TRUE(check_ybe({.s = 1, .t = 1, .n = 1, .order = 4}, 2, 4).pass());
  Report r = check_ybe({.s = 2, .t = 2, .n = 2, .order = 3, .parity = std::pair{-1, 1}}, 2, 3);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.checked, 0U);
  EXPECT_TRUE(check_ybe({.s = 1, .t = 2, .n = 1, .order = 3}, 2, 3).pass());
}

TEST(SYbe, DetectsBrokenOperator) {
  // dropping one element must break the equation
  SSpec spec{.s = 1, .t = 1, .n = 1, .order = 3};
  PairOperator broken(1, 3, [spec](const MultiIndex& a, const MultiIndex& b, const MultiIndex& i, const MultiIndex& j) {
    if (a == MultiIndex{1} && b == MultiIndex{0} && i == MultiIndex{0} && j == MultiIndex{1}) return Series(3);
    return s_element(spec, a, b, i, j);
  }, "broken");
  Report r = check_pair_ybe("ybe", broken, enumerate_sector(3, {.max_degree = 1}), 3);
  EXPECT_FALSE(r.pass());
  ASSERT_TRUE(r.first_failure);
}

TEST(Reversal, Relations) {
  EXPECT_TRUE(check_reversal(1, 1, 2, 2, 5).pass());
  Report r = check_reversal(2, 1, 1, 2, 5);
  EXPECT_TRUE(r.pass()) << (r.first_failure ? r.first_failure->lhs + " vs " + r.first_failure->rhs : "");
  EXPECT_TRUE(check_reversal(2, 2, 2, 2, 4).pass());
}

TEST(STrace, ClosedForms) {
  const int N = 8;
  for (int n = 1; n <= 3; ++n) {
    const MultiIndex zero(static_cast<std::size_t>(n), 0);
    for (const auto& a : enumerate_sector(static_cast<std::size_t>(n), {.max_degree = 3})) {
      Series want = Series(Scalar(1), N) / fixtures::binomial(Scalar(1), -qs(weight(a)), 1, N);
      EXPECT_EQ(str_element(a, zero, a, zero, N), want) << to_string(a);
    }
    for (int k = 0; k < n; ++k)
      for (int m = 0; m <= 3; ++m)
        for (int l = 0; l <= 3; ++l) {
          auto me = fixtures::e(n, k, m);
          auto le = fixtures::e(n, k, l);
          Series want = fixtures::slm(m, l, N);
          EXPECT_EQ(str_element(me, le, me, le, N), want) << m << "," << l;
          EXPECT_EQ(Scalar(-1).pow(l - m) * qs(l - m) * str_element(le, me, le, me, N), want);
        }
  }
  EXPECT_TRUE(str_element({1, 0}, {0, 1}, {0, 0}, {1, 1}, N).is_zero());
}

TEST(STrace, YangBaxter) {
  EXPECT_TRUE(check_str_ybe(2, 1, 4).pass());
  EXPECT_TRUE(check_str_ybe(3, 1, 3).pass());
}
