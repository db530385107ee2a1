#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "tetra/spectral.hpp"

using namespace tetra;
using fixtures::qs;

TEST(SingularVector, ClosedForms) {
  auto v0 = singular_vector(SingularFamily::B, 0, 0, 2);
  EXPECT_EQ(v0.state, State({0, 0, 0, 0}, Scalar(1)));
  auto v1 = singular_vector(SingularFamily::B, 1, 0, 2);
  State want({0, 0, 0, 1}, Scalar(1));
  want.add({0, 1, 0, 0}, Scalar::i() * Scalar::v_pow(1));
  EXPECT_EQ(v1.state, want);
  auto vm = singular_vector(SingularFamily::C, 0, -1, 3);
  State wm({0, 1, 0, 0, 0, 1}, Scalar(1));
  wm.add({0, 0, 1, 0, 1, 0}, -qs(1));
  EXPECT_EQ(vm.state, wm);
  EXPECT_EQ(vm.block, (Block{-1, -1}));
  EXPECT_EQ(singular_vector(SingularFamily::C, 3, 1, 2).block, (Block{1, -1}));
  EXPECT_THROW(singular_vector(SingularFamily::C, 0, -1, 1), std::invalid_argument);
  EXPECT_THROW(singular_vector(SingularFamily::B, 2, 1, 2), std::invalid_argument);
  EXPECT_THROW(singular_vector(SingularFamily::C, 2, 0, 2), std::invalid_argument);
}

TEST(SingularVector, Verified) {
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l <= 4; ++l) {
      EXPECT_TRUE(verify_singular({AlgebraType::D2, n}, singular_vector(SingularFamily::B, l, 0, n)).pass());
      for (int eps : {1, -1}) {
        if (l == 0 && eps < 0 && n < 2) continue;
        for (auto t : {AlgebraType::A2, AlgebraType::C1})
          EXPECT_TRUE(verify_singular({t, n}, singular_vector(SingularFamily::C, l, eps, n)).pass()) << l << eps;
      }
    }
  // a non-singular vector is caught
  SingularVector bad{.family = SingularFamily::B, .l = 1, .n = 2, .state = State({0, 0, 0, 1}, Scalar(1))};
  EXPECT_FALSE(verify_singular({AlgebraType::D2, 2}, bad).pass());
}

TEST(FindSingular, Sectors) {
  const AlgebraSpec d2{AlgebraType::D2, 2};
  auto one = find_singular(d2, {0, 3});
  ASSERT_EQ(one.size(), 1U);
  EXPECT_TRUE(proportional(one[0].state, singular_vector(SingularFamily::B, 3, 0, 2).state));
  EXPECT_TRUE(find_singular(d2, {1, 0}).empty());
  EXPECT_TRUE(find_singular(d2, {1, 1}).empty());
  const AlgebraSpec c1{AlgebraType::C1, 2};
  auto mixed = find_singular(c1, {1, 1});
  ASSERT_EQ(mixed.size(), 1U);
  EXPECT_EQ(mixed[0].block, (Block{-1, -1}));
  EXPECT_TRUE(proportional(mixed[0].state, singular_vector(SingularFamily::C, 0, -1, 2).state));
  EXPECT_EQ(find_singular(c1, {0, 2}).size(), 2U);
  EXPECT_THROW(find_singular(c1, {-1, 2}), std::invalid_argument);
  EXPECT_THROW(find_singular({AlgebraType::A1, 2}, {0, 1}), std::invalid_argument);
}

TEST(FindSingular, Completeness) {
  for (auto t : {AlgebraType::D2, AlgebraType::A2, AlgebraType::C1})
    for (int n = 2; n <= 3; ++n) EXPECT_TRUE(check_singular_completeness({t, n}, 4).pass()) << to_string(t) << n;
}

TEST(Eigenvalue, Products) {
  const int N = 6;
  const Series one(Scalar(1), N);
  const Series z = Series::monomial(Scalar(1), {1}, N);
  EXPECT_EQ(eigenvalue_product(AlgebraType::D2, {0, 0}, N), one);
  EXPECT_EQ(eigenvalue_product(AlgebraType::D2, {1, 0}, N), (z + Series(qs(1), N)) / (one + qs(1) * z));
  const Scalar c = -Scalar::i() * Scalar::v_pow(1);
  EXPECT_EQ(eigenvalue_product(AlgebraType::C1, {1, 1}, N), c * one / (one - z));
  EXPECT_EQ(eigenvalue_product(AlgebraType::C1, {2, -1}, N), (z - Series(qs(2), N)) / (one - qs(2) * z));
  const Scalar a = Scalar::i() * Scalar::v_pow(1);
  EXPECT_EQ(eigenvalue_product(AlgebraType::A2, {1, 1}, N), (z - Series(a, N)) / (one - a * z));
  EXPECT_EQ(eigenvalue_product(AlgebraType::A2, {1, -1}, N), (z + Series(a, N)) / (one + a * z));
}

TEST(Eigenvalue, UnitarityAndDistinctness) {
  const int N = 6;
  const Series one(Scalar(1), N);
  for (auto t : {AlgebraType::D2, AlgebraType::A2, AlgebraType::C1}) {
    auto labels = spectral_labels(t, 2, 4);
    for (const auto& s : labels) {
      if (t == AlgebraType::C1 && s.l % 2 == 1) {
        Series prefactor = eigenvalue_product(t, {1, s.eps}, N);
        EXPECT_EQ(eigenvalue_product(t, s, N) * eigenvalue_product(t, s, N, true), prefactor);
      } else {
        EXPECT_EQ(eigenvalue_product(t, s, N) * eigenvalue_product(t, s, N, true), one);
      }
    }
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        if (labels[a].l == 0 && labels[b].l == 0) continue;  // V_0^+ and V_0^- share the eigenvalue 1
        if (t == AlgebraType::C1 && labels[a].l == labels[b].l) continue;  // rho^eps does not depend on eps
        EXPECT_NE(eigenvalue_product(t, labels[a], N), eigenvalue_product(t, labels[b], N))
            << to_string(t) << " " << to_string(labels[a]) << " " << to_string(labels[b]);
      }
  }
}

TEST(Spectral, PRonSingularVectors) {
  for (auto t : {AlgebraType::D2, AlgebraType::A2, AlgebraType::C1}) {
    Report r = check_spectral_all(t, 2, 3, 5);
    EXPECT_TRUE(r.pass()) << to_string(t) << " " << (r.first_failure ? r.first_failure->where : "");
  }
  EXPECT_TRUE(check_spectral_all(AlgebraType::D2, 3, 2, 4).pass());
  EXPECT_TRUE(check_spectral({.s = 2, .t = 2, .n = 2, .order = 4, .parity = std::pair{-1, 1}}, AlgebraType::C1, {3, -1}).pass());
}

TEST(Spectral, DetectsWrongEigenvalue) {
  // the D2 l = 2 vector is not an eigenvector with the l = 1 eigenvalue
  const SSpec spec{.s = 1, .t = 1, .n = 2, .order = 4};
  auto v = singular_vector(SingularFamily::B, 2, 0, 2);
  auto got = apply_pr(s_operator(spec), v.state);
  EXPECT_NE(got, eigenvalue_product(AlgebraType::D2, {1, 0}, 4) * lift(v.state, 4));
  EXPECT_EQ(got, eigenvalue_product(AlgebraType::D2, {2, 0}, 4) * lift(v.state, 4));
  EXPECT_THROW(check_spectral(spec, AlgebraType::A2, {1, 1}), std::invalid_argument);
  EXPECT_THROW(check_spectral({.s = 2, .t = 2, .n = 2, .order = 4, .parity = std::pair{1, 1}}, AlgebraType::C1, {1, 1}),
               std::invalid_argument);
}
