/**
 * @file checks.hpp
 * @brief Yang-Baxter equation for S^{s,t} and S^tr as bivariate series, and
 * the reversal relation between S^{t,s} and S^{s,t}.
 */
#pragma once

#include <algorithm>
#include <sstream>

#include "tetra/reduction/s_matrix.hpp"
#include "tetra/report.hpp"

namespace tetra {

using BiState = VectorState<BiSeries>;

template <typename C>
std::string series_state_text(const VectorState<C>& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    os << (first ? "" : " + ") << "[" << c.str() << "]|" << to_string(m) << ">";
    first = false;
  }
  return first ? "0" : os.str();
}

/// Applies S(x^ax y^ay) to the blocks p and r (each of arity n) of a 3n-mode state.
inline BiState apply_on_blocks(const PairOperator& S, const BiState& st, std::size_t p, std::size_t r, int ax,
                               int ay, int order) {
  const auto n = static_cast<std::size_t>(S.n());
  BiState out;
  for (const auto& [m, c] : st.terms()) {
    const MultiIndex ij = concat(slice(m, p * n, n), slice(m, r * n, n));
    for (const auto& [ab, ser] : S.column(ij)) {
      MultiIndex o = m;
      std::copy(ab.begin(), ab.begin() + static_cast<std::ptrdiff_t>(n), o.begin() + static_cast<std::ptrdiff_t>(p * n));
      std::copy(ab.begin() + static_cast<std::ptrdiff_t>(n), ab.end(), o.begin() + static_cast<std::ptrdiff_t>(r * n));
      out.add(o, c * ser.embed(ax, ay, order));
    }
  }
  return out;
}

/// Both sides of S12(x) S13(xy) S23(y) = S23(y) S13(xy) S12(x) on one basis vector.
inline std::pair<BiState, BiState> ybe_sides(const PairOperator& S, const MultiIndex& m, int order) {
  BiState v(m, BiSeries(Scalar(1), order));
  BiState lhs = apply_on_blocks(S, apply_on_blocks(S, apply_on_blocks(S, v, 1, 2, 0, 1, order), 0, 2, 1, 1, order),
                                0, 1, 1, 0, order);
  BiState rhs = apply_on_blocks(S, apply_on_blocks(S, apply_on_blocks(S, v, 0, 1, 1, 0, order), 0, 2, 1, 1, order),
                                1, 2, 0, 1, order);
  return {std::move(lhs), std::move(rhs)};
}

inline Report check_pair_ybe(const std::string& id, const PairOperator& S, const std::vector<MultiIndex>& labels,
                             int order) {
  if (S.order() < order) throw std::invalid_argument("element order below the bivariate order");
  return parallel_sweep(id, labels.size(), [&](std::size_t k, Report& rep) {
    auto [lhs, rhs] = ybe_sides(S, labels[k], order);
    if (lhs == rhs) rep.ok();
    else rep.fail({k, labels[k], "S12 S13 S23 = S23 S13 S12", series_state_text(lhs), series_state_text(rhs)});
  });
}

/// Yang-Baxter for S^{s,t} on all 3n-mode labels of total degree <= degree.
/// A parity pair in the spec restricts the first two blocks to that parity.
inline Report check_ybe(const SSpec& spec, int degree, int order) {
  spec.validate();
  SSpec elems = spec;
  elems.parity.reset();
  elems.order = order;
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<MultiIndex> labels;
  for (auto& m : enumerate_sector(3 * n, {.max_degree = degree})) {
    if (spec.parity) {
      if (detail::parity_sign(weight(m, 0, n)) != spec.parity->first) continue;
      if (detail::parity_sign(weight(m, n, n)) != spec.parity->second) continue;
    }
    labels.push_back(std::move(m));
  }
  return check_pair_ybe("ybe", s_operator(elems), labels, order);
}

/// Yang-Baxter for S^tr on all triples whose blocks each have weight <= max_weight.
inline Report check_str_ybe(int n, int max_weight, int order) {
  const auto nn = static_cast<std::size_t>(n);
  auto block = enumerate_sector(nn, {.max_degree = max_weight});
  std::vector<MultiIndex> labels;
  for (const auto& x : block)
    for (const auto& y : block)
      for (const auto& z : block) labels.push_back(concat(concat(x, y), z));
  return check_pair_ybe("str-ybe", str_operator(n, order), labels, order);
}

/// Reversal relation between raw S^{t,s}(z) and raw S^{s,t}(z^{s/t}) with
/// reversed labels, compared as series in w = z^{1/t}. Every element with
/// |i| + |j| <= degree is checked.
inline Report check_reversal(int t, int s, int n, int degree, int order) {
  SSpec probe{.s = s, .t = t, .n = n, .order = order};
  probe.validate();
  const auto nn = static_cast<std::size_t>(n);
  const int W = t * order;
  struct Item {
    MultiIndex a, b, i, j;
  };
  std::vector<Item> items;
  for (const auto& ij : enumerate_sector(2 * nn, {.max_degree = degree})) {
    MultiIndex i = slice(ij, 0, nn);
    MultiIndex j = slice(ij, nn, nn);
    MultiIndex a(nn, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
      if (r == nn) {
        MultiIndex b(nn);
        for (std::size_t x = 0; x < nn; ++x) b[x] = i[x] + j[x] - a[x];
        items.push_back({a, b, i, j});
        return;
      }
      for (int v = 0; v <= i[r] + j[r]; ++v) {
        a[r] = v;
        rec(r + 1);
      }
    };
    rec(0);
  }
  auto rev = [](MultiIndex m) {
    std::reverse(m.begin(), m.end());
    return m;
  };
  return parallel_sweep("reversal", items.size(), [&](std::size_t k, Report& rep) {
    const auto& [a, b, i, j] = items[k];
    Series lhs = s_element_raw(t, s, a, b, i, j, order).truncated(W).dilated(t);
    Series rhs = s_element_raw(s, t, rev(i), rev(j), rev(a), rev(b), (W + s - 1) / s).truncated(W).dilated(s);
    LaurentPoly num(1);
    LaurentPoly den(1);
    for (std::size_t r = 0; r < nn; ++r) {
      num *= poch_ratio_poly(i[r], 0, 4) * poch_ratio_poly(j[r], 0, 4);
      den *= poch_ratio_poly(a[r], 0, 4) * poch_ratio_poly(b[r], 0, 4);
    }
    rhs = Scalar::fraction(num, den) * rhs;
    const int shift = weight(j) - weight(b);
    if (shift >= 0) rhs = rhs.shifted(shift);
    else lhs = lhs.shifted(-shift);
    rep.expect_equal(lhs, rhs, k, concat(concat(a, b), concat(i, j)), "reversal");
  });
}

}  // namespace tetra
