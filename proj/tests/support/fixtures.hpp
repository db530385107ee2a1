// Closed-form matrix elements of S^{s,t}(z) and S^tr(z), expanded as series.
#pragma once

#include <string>
#include <vector>

#include "tetra/reduction.hpp"

namespace tetra::fixtures {

inline Scalar qs(int e) { return Scalar::q_pow(e); }

/// c0 + c1 z^d as a series.
inline Series binomial(const Scalar& c0, const Scalar& c1, int d, int order) {
  return Series(c0, order) + Series::monomial(c1, {d}, order);
}

/// prod_{k<m} (1 + sign z^d q^{e0 + step k}).
inline Series zpoch(int sign, int d, int e0, int step, int m, int order) {
  Series r(Scalar(1), order);
  for (int k = 0; k < m; ++k) r *= binomial(Scalar(1), Scalar(sign) * qs(e0 + step * k), d, order);
  return r;
}

/// (1+q)(1-z)/((1+zq)(1+zq^2)) as displayed for the S^{1,1} element (2e1,0) <- (e1,e1).
inline Series s11_two_e1_display(int order) {
  return Scalar(LaurentPoly(1) + LaurentPoly::q_pow(1)) * binomial(Scalar(1), Scalar(-1), 1, order) /
         (binomial(Scalar(1), qs(1), 1, order) * binomial(Scalar(1), qs(2), 1, order));
}

struct SFixture {
  std::string name;
  SSpec spec;
  MultiIndex a, b, i, j;
  Series expect;
};

inline MultiIndex e(int n, int k, int mult = 1) { return unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(k), mult); }

/// Every closed form for S^{s,t} at rank n, with label weights up to max_weight
/// in the diagonal families.
inline std::vector<SFixture> s_fixtures(int n, int order, int max_weight = 3) {
  std::vector<SFixture> out;
  const MultiIndex zero(static_cast<std::size_t>(n), 0);
  const Series one(Scalar(1), order);
  auto spec = [&](int s, int t, std::optional<std::pair<int, int>> par = std::nullopt) {
    return SSpec{.s = s, .t = t, .n = n, .order = order, .parity = par};
  };
  const std::pair<int, int> pp{1, 1}, pm{1, -1}, mp{-1, 1}, mm{-1, -1};

  out.push_back({"S11 vacuum", spec(1, 1), zero, zero, zero, zero, one});
  out.push_back({"S12 vacuum", spec(1, 2), zero, zero, zero, zero, one});
  out.push_back({"S++ vacuum", spec(2, 2, pp), zero, zero, zero, zero, one});

  const Series inv_1mz = one / binomial(Scalar(1), Scalar(-1), 1, order);
  const Series one_mzq2 = binomial(Scalar(1), -qs(2), 1, order);
  out.push_back({"S+- (0,e1)", spec(2, 2, pm), zero, e(n, 0), zero, e(n, 0), -qs(1) * inv_1mz});
  out.push_back({"S-+ (e1,0)", spec(2, 2, mp), e(n, 0), zero, e(n, 0), zero, inv_1mz});
  const Series smm = binomial(-qs(2), Scalar(1), 1, order) / one_mzq2;
  out.push_back({"S-- (e1,e1)", spec(2, 2, mm), e(n, 0), e(n, 0), e(n, 0), e(n, 0), smm});

  for (int t = 1; t <= 2; ++t) {
    for (const auto& a : enumerate_sector(static_cast<std::size_t>(n), {.max_degree = max_weight})) {
      const int w = weight(a);
      Series f = zpoch(-1, t, 0, t, w, order) / zpoch(1, t, 1, t, w, order);
      std::string tag = "S1" + std::to_string(t) + " diag " + to_string(a);
      out.push_back({tag + " left", spec(1, t), a, zero, a, zero, f});
      out.push_back({tag + " right", spec(1, t), zero, a, zero, a, Scalar(-1).pow(w) * qs(w) * f});
    }
  }
  for (const auto& a : enumerate_sector(static_cast<std::size_t>(n), {.parity = 0, .max_degree = 2 * ((max_weight + 1) / 2)})) {
    const int w = weight(a);
    Series f = zpoch(-1, 1, 0, 4, w / 2, order) / zpoch(-1, 1, 2, 4, w / 2, order);
    out.push_back({"S++ diag " + to_string(a) + " left", spec(2, 2, pp), a, zero, a, zero, f});
    out.push_back({"S++ diag " + to_string(a) + " right", spec(2, 2, pp), zero, a, zero, a, qs(w) * f});
  }

  const Series s2e1 = s11_two_e1_display(order);
  // the chain forces c0 >= 1 here, so the element carries an extra factor z
  out.push_back({"S11 (2e1,0)<-(e1,e1)", spec(1, 1), e(n, 0, 2), zero, e(n, 0), e(n, 0), s2e1.shifted(1)});
  out.push_back({"S11 (0,2e1)<-(e1,e1)", spec(1, 1), zero, e(n, 0, 2), e(n, 0), e(n, 0), -qs(1) * s2e1});

  if (n >= 2) {
    const MultiIndex e1 = e(n, 0);
    const MultiIndex en = e(n, n - 1);
    out.push_back({"S-- (en,en)", spec(2, 2, mm), en, en, en, en, smm});
    const Series cross = Scalar(LaurentPoly(1) - LaurentPoly::q_pow(2)) * one / one_mzq2;
    out.push_back({"S-- (en,e1)<-(e1,en)", spec(2, 2, mm), en, e1, e1, en, cross});
    out.push_back({"S-- (e1,en)<-(en,e1)", spec(2, 2, mm), e1, en, en, e1, cross.shifted(1)});
    const Series diag = -qs(1) * binomial(Scalar(1), Scalar(-1), 1, order) / one_mzq2;
    out.push_back({"S-- (e1,en)", spec(2, 2, mm), e1, en, e1, en, diag});
    out.push_back({"S-- (en,e1)", spec(2, 2, mm), en, e1, en, e1, diag});
  }
  return out;
}

/// z^l (q^{m-l+2}/z; q^2)_l / (q^{m-l} z; q^2)_{l+1}.
inline Series slm(int m, int l, int order) {
  Series num(Scalar(1), order);
  for (int k = 0; k < l; ++k) num *= binomial(-qs(m - l + 2 + 2 * k), Scalar(1), 1, order);
  return num / zpoch(-1, 1, m - l, 2, l + 1, order);
}

}  // namespace tetra::fixtures
