#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "tetra/qgroup.hpp"

using namespace tetra;
using fixtures::qs;

namespace {

State ket(MultiIndex m, int x, Scalar c = Scalar(1)) {
  m.push_back(x);
  return State(m, std::move(c));
}

}  // namespace

TEST(Cartan, Examples) {
  auto d2 = cartan({AlgebraType::D2, 3});
  EXPECT_EQ(d2[0][1], -2);
  EXPECT_EQ(d2[1][0], -1);
  EXPECT_EQ(d2[3][2], -2);
  EXPECT_EQ(d2[2][3], -1);
  EXPECT_EQ(d2[0][2], 0);
  auto a2 = cartan({AlgebraType::A2, 2});
  EXPECT_EQ(a2[0][1], -2);
  EXPECT_EQ(a2[1][0], -1);
  EXPECT_EQ(a2[2][1], -1);
  EXPECT_EQ(a2[1][2], -2);
  auto c1 = cartan({AlgebraType::C1, 2});
  EXPECT_EQ(c1[0][1], -1);
  EXPECT_EQ(c1[1][0], -2);
  EXPECT_EQ(cartan({AlgebraType::A1, 2})[0][1], -2);
  auto a1 = cartan({AlgebraType::A1, 4});
  EXPECT_EQ(a1[0][3], -1);
  EXPECT_EQ(a1[0][2], 0);
  for (auto t : {AlgebraType::D2, AlgebraType::A2, AlgebraType::C1, AlgebraType::A1}) {
    auto a = cartan({t, 3});
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i][i], 2);
  }
  EXPECT_THROW(cartan({AlgebraType::A1, 1}), std::invalid_argument);
  EXPECT_THROW(parse_algebra("B1"), std::invalid_argument);
}

TEST(RepAction, Examples) {
  const AlgebraSpec d2{AlgebraType::D2, 2};
  const Scalar i = Scalar::i();
  EXPECT_EQ(rep_action(d2, {Gen::f, 2}, {1, 3}), ket({1, 4}, 0));
  EXPECT_EQ(rep_action(d2, {Gen::k, 0}, {2, 0}), ket({2, 0}, 0, -i * Scalar::v_pow(5)));
  const Scalar kappa = Scalar::fraction(LaurentPoly::q_pow(1) + LaurentPoly(1), LaurentPoly::q_pow(1) - LaurentPoly(1));
  EXPECT_EQ(rep_action(d2, {Gen::e, 2}, {0, 2}), ket({0, 1}, 0, i * kappa * qnum(2)));
  EXPECT_EQ(rep_action(d2, {Gen::e, 0}, {0, 0}), ket({1, 0}, 1));
  EXPECT_TRUE(rep_action(d2, {Gen::f, 0}, {0, 3}).is_zero());

  const AlgebraSpec a2{AlgebraType::A2, 2};
  EXPECT_EQ(rep_action(a2, {Gen::e, 2}, {0, 3}), ket({0, 1}, 0, qnum(3) * qnum(2) / (qnum(2) * qnum(2))));
  const AlgebraSpec c1{AlgebraType::C1, 2};
  EXPECT_EQ(rep_action(c1, {Gen::f, 0}, {3, 1}), ket({1, 1}, -1, qnum(3) * qnum(2) / (qnum(2) * qnum(2))));
  EXPECT_EQ(rep_action(c1, {Gen::k, 0}, {1, 0}), ket({1, 0}, 0, -qs(3)));
  EXPECT_THROW(rep_action(c1, {Gen::e, 3}, {0, 0}), std::out_of_range);

  const AlgebraSpec a1{AlgebraType::A1, 3};
  EXPECT_EQ(rep_action(a1, {Gen::e, 0}, {0, 0, 2}), ket({1, 0, 1}, 1, qnum(2)));
  EXPECT_EQ(rep_action(a1, {Gen::f, 1}, {0, 2, 0}), ket({1, 1, 0}, 0, qnum(2)));
  EXPECT_EQ(rep_action(a1, {Gen::k, 2}, {0, 1, 3}), ket({0, 1, 3}, 0, qs(2)));

  for (auto t : {AlgebraType::D2, AlgebraType::A2, AlgebraType::C1, AlgebraType::A1}) {
    const AlgebraSpec spec{t, 3};
    for (int r = 0; r < spec.nodes(); ++r) {
      State v = ket({2, 1, 0}, 0);
      EXPECT_EQ(apply_word(spec, {{Gen::k, r}, {Gen::kinv, r}}, v), v);
    }
  }
}

TEST(Coproduct, Examples) {
  const AlgebraSpec d2{AlgebraType::D2, 2};
  const MultiIndex zero{0, 0};
  const Scalar k0 = -Scalar::i() * Scalar::v_pow(1);
  EXPECT_EQ(coproduct_action(d2, {Gen::k, 0}, zero, zero), State({0, 0, 0, 0, 0, 0}, k0 * k0));
  EXPECT_TRUE(coproduct_action(d2, {Gen::f, 0}, zero, zero).is_zero());
  State want({0, 0, 1, 0, 0, 1}, Scalar(1));
  want.add({1, 0, 0, 0, 1, 0}, k0);
  EXPECT_EQ(coproduct_action(d2, {Gen::e, 0}, zero, zero), want);
  // weight additivity of k under the coproduct
  const AlgebraSpec c1{AlgebraType::C1, 3};
  for (int r = 0; r <= 3; ++r) {
    MultiIndex l{1, 0, 2}, rr{0, 3, 1};
    Scalar kl = act(c1, Gen::k, r, l)->c;
    Scalar kr = act(c1, Gen::k, r, rr)->c;
    EXPECT_EQ(coproduct_action(c1, {Gen::k, r}, l, rr), State({1, 0, 2, 0, 3, 1, 0, 0}, kl * kr));
  }
}

TEST(Relations, AllAlgebras) {
  for (auto t : {AlgebraType::D2, AlgebraType::A2, AlgebraType::C1, AlgebraType::A1})
    for (int n = 2; n <= 3; ++n) {
      const AlgebraSpec spec{t, n};
      const int m = required_margin(spec);
      Report r = check_defining_relations(spec, 3 + m, m);
      EXPECT_TRUE(r.pass()) << to_string(t) << " n=" << n << " " << (r.first_failure ? r.first_failure->where : "");
      EXPECT_GT(r.checked, 0U);
    }
  Report a2 = check_defining_relations({AlgebraType::A2, 1}, 8, required_margin({AlgebraType::A2, 1}));
  EXPECT_TRUE(a2.pass());
  EXPECT_THROW(check_defining_relations({AlgebraType::D2, 2}, 6, 1), std::invalid_argument);
  EXPECT_THROW(check_defining_relations({AlgebraType::C1, 1}, 6, 4), std::invalid_argument);
  EXPECT_EQ(required_margin({AlgebraType::A1, 3}), 0);
}

TEST(Gauge, RoundTrip) {
  const SSpec spec{.s = 1, .t = 1, .n = 2, .order = 4};
  auto op = s_operator(spec).as_operator();
  auto there = gauge_transform(GaugeDirection::forward, op, 2);
  auto back = gauge_transform(GaugeDirection::inverse, there, 2);
  const Series one(Scalar(1), 4);
  for (const auto& ij : enumerate_sector(4, {.max_degree = 2})) {
    VectorState<Series> v(ij, one);
    EXPECT_EQ(apply_operator(back, v), apply_operator(op, v));
  }
  GradedOperator<Series> id{[&](const MultiIndex& m) { return VectorState<Series>(m, one); }, {}, "id"};
  auto gid = gauge_transform(GaugeDirection::forward, id, 2);
  EXPECT_EQ(apply_operator(gid, VectorState<Series>({1, 0, 0, 2}, one)), VectorState<Series>({1, 0, 0, 2}, gauge_constant().pow(1) * one));
  EXPECT_EQ(apply_operator(gid, VectorState<Series>({1, 1, 1, 1}, one)), VectorState<Series>({1, 1, 1, 1}, one));
}

TEST(Theorem, Normalization) {
  for (int n = 1; n <= 2; ++n) {
    for (auto [s, t] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}})
      EXPECT_TRUE(check_normalization({.s = s, .t = t, .n = n, .order = 6}).pass());
  }
  // the (-,-) row is unchanged by the gauge: (z - q^2)/(1 - z q^2)
  Report r = check_normalization({.s = 2, .t = 2, .n = 2, .order = 6, .parity = std::pair{-1, -1}});
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checked, 1U);
}

TEST(Theorem, IntertwiningPerNode) {
  const SSpec d{.s = 1, .t = 1, .n = 2, .order = 6};
  EXPECT_TRUE(check_intertwining({AlgebraType::D2, 2}, d, 2, 2).pass());
  const SSpec c{.s = 2, .t = 2, .n = 2, .order = 6, .parity = std::pair{1, -1}};
  EXPECT_TRUE(check_intertwining({AlgebraType::C1, 2}, c, 0, 2).pass());
  EXPECT_THROW(check_intertwining({AlgebraType::A2, 2}, d, 0, 2), std::invalid_argument);
  EXPECT_THROW(check_intertwining({AlgebraType::D2, 3}, d, 0, 2), std::invalid_argument);
}

TEST(Theorem, AllPairs) {
  for (int n = 1; n <= 2; ++n)
    for (auto [s, t] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
      Report r = check_theorem_main({.s = s, .t = t, .n = n, .order = 5}, 2);
      EXPECT_TRUE(r.pass()) << s << t << " n=" << n << " " << (r.first_failure ? r.first_failure->where : "");
    }
  for (int e1 : {1, -1})
    for (int e2 : {1, -1})
      EXPECT_TRUE(check_theorem_main({.s = 2, .t = 2, .n = 2, .order = 4, .parity = std::pair{e1, e2}}, 2).pass());
}

TEST(Theorem, DetectsWrongGauge) {
  // S^{1,1} with the generators left ungauged does not intertwine
  const AlgebraSpec alg{AlgebraType::D2, 2};
  const PairOperator S = s_operator({.s = 1, .t = 1, .n = 2, .order = 4});
  Report rep{.id = "ungauged"};
  std::size_t k = 0;
  for (const auto& ij : enumerate_sector(4, {.max_degree = 2}))
    for (int r = 0; r <= 2; ++r) detail::check_relations_at(rep, k++, alg, r, S, ij, false);
  EXPECT_FALSE(rep.pass());
  // nor does S^{1,2} against the D2 generators
  const PairOperator S12 = s_operator({.s = 1, .t = 2, .n = 2, .order = 4});
  Report wrong{.id = "mismatched"};
  for (const auto& ij : enumerate_sector(4, {.max_degree = 2}))
    for (int r = 0; r <= 2; ++r) detail::check_relations_at(wrong, k++, alg, r, S12, ij, true);
  EXPECT_FALSE(wrong.pass());
}

TEST(STraceIntertwining, AllNodes) {
  Report r = check_str_intertwining(2, 2, 5);
  EXPECT_TRUE(r.pass()) << (r.first_failure ? r.first_failure->where + " " + to_string(r.first_failure->indices) : "");
  EXPECT_TRUE(check_str_intertwining(3, 1, 4).pass());
  Report vac = check_str_intertwining(2, 0, 4);
  EXPECT_TRUE(vac.pass());
}
