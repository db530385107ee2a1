/**
 * @file aq_sl3.hpp
 * @brief Fundamental q-oscillator representations pi_1, pi_2 of the quantized
 * coordinate ring A_q(sl_3), their tensor cubes, and the intertwining property
 * of R composed with the reversal of tensor factors.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "tetra/threedim_r/checks.hpp"

namespace tetra {

/// Generator t_{rs}, 1 <= r, s <= 3.
struct TGen {
  int r = 1;
  int s = 1;
  [[nodiscard]] std::string str() const { return "t" + std::to_string(r) + std::to_string(s); }
};

inline TGen parse_tgen(const std::string& label) {
  if (label.size() != 3 || label[0] != 't' || label[1] < '1' || label[1] > '3' || label[2] < '1' || label[2] > '3')
    throw std::invalid_argument("invalid generator label: " + label);
  return {label[1] - '0', label[2] - '0'};
}

/// pi_rep(t_{rs})|m> = coeff |m'>, or nullopt when the matrix entry vanishes.
/// Oscillators: k|m> = q^m|m>, a+|m> = |m+1>, a-|m> = (1-q^{2m})|m-1>.
inline std::optional<std::pair<int, LaurentPoly>> aq_single(int rep, TGen g, int m) {
  if (rep != 1 && rep != 2) throw std::invalid_argument("A_q(sl3) fundamental representation must be 1 or 2");
  if (g.r < 1 || g.r > 3 || g.s < 1 || g.s > 3) throw std::invalid_argument("invalid generator t_rs");
  // the 2x2 oscillator block sits at rows/cols {1,2} for pi_1 and {2,3} for pi_2
  const int base = rep == 1 ? 1 : 2;
  const int other = rep == 1 ? 3 : 1;
  if (g.r == other || g.s == other) {
    if (g.r == other && g.s == other) return std::pair{m, LaurentPoly(1)};
    return std::nullopt;
  }
  const int rr = g.r - base;
  const int ss = g.s - base;
  if (rr == 0 && ss == 0) {
    if (m == 0) return std::nullopt;
    return std::pair{m - 1, LaurentPoly(1) - LaurentPoly::q_pow(2 * m)};
  }
  if (rr == 0 && ss == 1) return std::pair{m, LaurentPoly::q_pow(m)};
  if (rr == 1 && ss == 0) return std::pair{m, -LaurentPoly::q_pow(m + 1)};
  return std::pair{m + 1, LaurentPoly(1)};
}

/// Single-factor action as a state.
inline State aq_fundamental_action(int rep, TGen g, int m) {
  State out;
  if (auto r = aq_single(rep, g, m)) out.add({r->first}, r->second);
  return out;
}

/// Tensor-cube action pi_{x y x}(t_{rs}) via Delta t_rs = sum t_rk (x) t_kl (x) t_ls.
/// reps = {1,2,1} or {2,1,2}.
inline State aq_cube_action(std::array<int, 3> reps, TGen g, const MultiIndex& m) {
  if (m.size() != 3) throw std::invalid_argument("tensor cube action needs three levels");
  State out;
  for (int k = 1; k <= 3; ++k) {
    auto x = aq_single(reps[0], {g.r, k}, m[0]);
    if (!x) continue;
    for (int l = 1; l <= 3; ++l) {
      auto y = aq_single(reps[1], {k, l}, m[1]);
      if (!y) continue;
      auto z = aq_single(reps[2], {l, g.s}, m[2]);
      if (!z) continue;
      out.add({x->first, y->first, z->first}, x->second * y->second * z->second);
    }
  }
  return out;
}

template <typename C>
VectorState<C> reverse_factors(const VectorState<C>& s) {
  return s.relabel([](const MultiIndex& m) { return MultiIndex(m.rbegin(), m.rend()); });
}

/// Phi = R o sigma.
inline State phi_apply(const State& s) { return r_apply(reverse_factors(s), 0, 1, 2); }

inline State aq_cube_apply(std::array<int, 3> reps, TGen g, const State& s) {
  State out;
  for (const auto& [m, c] : s.terms()) out.add_scaled(c, aq_cube_action(reps, g, m));
  return out;
}

/// Phi pi_121(t) = pi_212(t) Phi on every basis vector of total degree <= D, for the given generators.
inline Report check_aq_intertwiner(const std::vector<TGen>& gens, int D) {
  std::vector<MultiIndex> basis = enumerate_sector(3, {.max_degree = D});
  const std::size_t nb = basis.size();
  return parallel_sweep("intertwiner-aq", gens.size() * nb, [&](std::size_t n, Report& rep) {
    const TGen g = gens[n / nb];
    const MultiIndex& m = basis[n % nb];
    State v(m, Scalar(1));
    State lhs = phi_apply(aq_cube_apply({1, 2, 1}, g, v));
    State rhs = aq_cube_apply({2, 1, 2}, g, phi_apply(v));
    MultiIndex idx = {g.r, g.s, m[0], m[1], m[2]};
    if (lhs == rhs) rep.ok();
    else rep.fail({n, idx, g.str(), state_text(lhs), state_text(rhs)});
  });
}

inline std::vector<TGen> all_tgens() {
  std::vector<TGen> g;
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= 3; ++s) g.push_back({r, s});
  return g;
}

}  // namespace tetra
