/**
 * @file intertwining.hpp
 * @brief Gauge operator K and the intertwining checks identifying S^{s,t}(z)
 * with gauge transformed quantum R matrices, and S^tr(z) with the
 * U_q(A^{(1)}_{n-1}) R matrix.
 *
 * Both sides of an intertwining relation act on |i> (x) |j> in V_x (x) V_y.
 * After the y^{delta_{r,0}} rescaling every term depends on z = x/y only;
 * f-relations at r = 0 are multiplied by z once more so no negative powers
 * appear.
 */
#pragma once

#include "tetra/qgroup/relations.hpp"
#include "tetra/reduction.hpp"

namespace tetra {

/// The scalar -i q^{1/2} whose |m|-th power is the eigenvalue of K.
inline Scalar gauge_constant() { return -Scalar::i() * Scalar::v_pow(1); }

enum class GaugeDirection { forward, inverse };

/// forward: (K^{-1} (x) 1) R (1 (x) K); inverse: (K (x) 1) S (1 (x) K^{-1}).
template <typename C>
GradedOperator<C> gauge_transform(GaugeDirection dir, const GradedOperator<C>& op, int n) {
  const auto nn = static_cast<std::size_t>(n);
  const int sign = dir == GaugeDirection::forward ? 1 : -1;
  return {[op, nn, sign](const MultiIndex& ij) {
            if (ij.size() != 2 * nn) throw std::invalid_argument("gauge: input label must have arity 2n");
            VectorState<C> out;
            const int wj = weight(ij, nn, nn);
            const VectorState<C> image = op.on_basis(ij);
            for (const auto& [ab, c] : image.terms())
              out.add(ab, gauge_constant().pow(sign * (wj - weight(ab, 0, nn))) * c);
            return out;
          },
          op.conserved, op.name + (dir == GaugeDirection::forward ? "~" : "^")};
}

/// Which algebra a pair (s,t) realizes.
inline AlgebraType paired_algebra(int s, int t) {
  if (s == 1 && t == 1) return AlgebraType::D2;
  if (s == 1 && t == 2) return AlgebraType::A2;
  if (s == 2 && t == 2) return AlgebraType::C1;
  throw std::invalid_argument("no quantum affine algebra is paired with S^{" + std::to_string(s) + "," +
                              std::to_string(t) + "}");
}

namespace detail {

/// One leg of a coproduct-type operator on a pair label.
struct Leg {
  Gen gen;
  bool tilde = false;
};

/// (left (x) right) on |i> (x) |j>, z-power = left x exponent + right y exponent removed.
/// A missing leg is the identity.
inline VectorState<Series> apply_pair(const AlgebraSpec& alg, int r, std::optional<Leg> left, std::optional<Leg> right,
                                      const MultiIndex& ij, const Series& coeff, int zshift) {
  const auto n = static_cast<std::size_t>(alg.n);
  const MultiIndex i = slice(ij, 0, n);
  const MultiIndex j = slice(ij, n, n);
  auto leg = [&](const std::optional<Leg>& l, const MultiIndex& m) -> std::optional<ActionTerm> {
    if (!l) return ActionTerm{m, Scalar(1), 0};
    auto t = act(alg, l->gen, r, m);
    if (t && l->tilde) t->c = gauge_constant().pow(weight(m) - weight(t->m)) * t->c;
    return t;
  };
  VectorState<Series> out;
  auto a = leg(left, i);
  if (!a) return out;
  auto b = leg(right, j);
  if (!b) return out;
  const int zp = a->xexp + zshift;
  if (zp < 0) throw std::logic_error("negative power of z in an intertwining term");
  out.add(concat(a->m, b->m), (a->c * b->c * coeff).shifted(zp));
  return out;
}

struct PairTerm {
  std::optional<Leg> left, right;
};

inline VectorState<Series> apply_sum(const AlgebraSpec& alg, int r, const std::vector<PairTerm>& op,
                                     const VectorState<Series>& st, int zshift) {
  VectorState<Series> out;
  for (const auto& [ij, c] : st.terms())
    for (const auto& t : op) out += apply_pair(alg, r, t.left, t.right, ij, c, zshift);
  return out;
}

inline VectorState<Series> apply_s(const PairOperator& S, const VectorState<Series>& st) {
  VectorState<Series> out;
  for (const auto& [ij, c] : st.terms())
    for (const auto& [ab, ser] : S.column(ij)) out.add(ab, c * ser);
  return out;
}

/// X S |ij> against S Y |ij> for every label; X, Y are sums of pair terms.
inline void intertwine(Report& rep, std::size_t k, const AlgebraSpec& alg, int r, const PairOperator& S,
                       const MultiIndex& ij, const std::vector<PairTerm>& X, const std::vector<PairTerm>& Y,
                       int zshift, const std::string& where) {
  const VectorState<Series> v(ij, Series(Scalar(1), S.order()));
  auto lhs = apply_sum(alg, r, X, apply_s(S, v), zshift);
  auto rhs = apply_s(S, apply_sum(alg, r, Y, v, zshift));
  if (lhs == rhs) rep.ok();
  else rep.fail({k, ij, where, series_state_text(lhs), series_state_text(rhs)});
}

/// Pair labels of total degree <= degree, restricted to the parity block if any.
inline std::vector<MultiIndex> pair_labels(const SSpec& spec, int degree) {
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<MultiIndex> out;
  for (auto& m : enumerate_sector(2 * n, {.max_degree = degree})) {
    if (spec.parity && (parity_sign(weight(m, 0, n)) != spec.parity->first ||
                        parity_sign(weight(m, n, n)) != spec.parity->second))
      continue;
    out.push_back(std::move(m));
  }
  return out;
}

inline void check_relations_at(Report& rep, std::size_t k, const AlgebraSpec& alg, int r, const PairOperator& S,
                               const MultiIndex& ij, bool gauged) {
  const std::string sr = std::to_string(r);
  const Leg e{Gen::e, gauged}, f{Gen::f, gauged};
  const Leg e0{Gen::e}, f0{Gen::f}, kk{Gen::k}, ki{Gen::kinv};
  intertwine(rep, k, alg, r, S, ij, {{e, std::nullopt}, {kk, e0}}, {{std::nullopt, e}, {e0, kk}}, 0, "e" + sr);
  intertwine(rep, k, alg, r, S, ij, {{std::nullopt, f0}, {f, ki}}, {{f0, std::nullopt}, {ki, f}}, r == 0 ? 1 : 0,
             "f" + sr);
  intertwine(rep, k, alg, r, S, ij, {{kk, kk}}, {{kk, kk}}, 0, "k" + sr);
}

}  // namespace detail

/// (ce) and (cf) for one node r on all pair labels of degree <= degree, plus (kR).
inline Report check_intertwining(const AlgebraSpec& alg, const SSpec& sspec, int r, int degree) {
  sspec.validate();
  alg.validate();
  if (paired_algebra(sspec.s, sspec.t) != alg.type || alg.n != sspec.n)
    throw std::invalid_argument("S^{" + std::to_string(sspec.s) + "," + std::to_string(sspec.t) +
                                "} at rank " + std::to_string(sspec.n) + " is not paired with " + to_string(alg.type) +
                                " at rank " + std::to_string(alg.n));
  alg.check_node(r);
  const PairOperator S = s_operator(sspec);
  const auto labels = detail::pair_labels(sspec, degree);
  return parallel_sweep("intertwining:" + to_string(alg.type) + ":r=" + std::to_string(r), labels.size(),
                        [&](std::size_t k, Report& rep) { detail::check_relations_at(rep, k, alg, r, S, labels[k], true); });
}

/// Normalization rows of S^{s,t} against the gauge transformed R matrix normalization.
inline Report check_normalization(const SSpec& sspec) {
  sspec.validate();
  Report rep{.id = "normalization"};
  const auto n = static_cast<std::size_t>(sspec.n);
  const int N = sspec.order;
  const MultiIndex zero(n, 0);
  const MultiIndex e1 = unit_vector(n, 0);
  const Series one(Scalar(1), N);
  const Series inv_1mz = one / (one - Series::monomial(Scalar(1), {1}, N));
  const Scalar c = gauge_constant();
  struct Row {
    std::pair<int, int> block;
    MultiIndex i, j;
    Series r_value;
  };
  std::vector<Row> rows{{{1, 1}, zero, zero, one}};
  if (sspec.s == 2) {
    rows.push_back({{1, -1}, zero, e1, c * inv_1mz});
    rows.push_back({{-1, 1}, e1, zero, c * inv_1mz});
    rows.push_back({{-1, -1}, e1, e1,
                    (Series::monomial(Scalar(1), {1}, N) - Series(Scalar::q_pow(2), N)) /
                        (one - Series::monomial(Scalar::q_pow(2), {1}, N))});
  }
  std::size_t k = 0;
  for (const auto& row : rows) {
    if (sspec.parity && *sspec.parity != row.block) continue;
    SSpec spec = sspec;
    if (spec.s == 2) spec.parity = row.block;
    const MultiIndex ij = concat(row.i, row.j);
    const Series want = c.pow(weight(row.j) - weight(row.i)) * row.r_value;
    rep.expect_equal(s_operator(spec).apply(ij), VectorState<Series>(ij, want), k++, ij, "normalization");
  }
  return rep;
}

/// Theorem check: normalization, (kR) and (ce)/(cf) at every node.
inline Report check_theorem_main(const SSpec& sspec, int degree) {
  sspec.validate();
  const AlgebraSpec alg{paired_algebra(sspec.s, sspec.t), sspec.n};
  alg.validate();
  Report total{.id = "theorem"};
  total.merge(check_normalization(sspec));
  const PairOperator S = s_operator(sspec);
  const auto labels = detail::pair_labels(sspec, degree);
  total.merge(parallel_sweep("theorem", labels.size() * static_cast<std::size_t>(alg.nodes()), [&](std::size_t k, Report& rep) {
    const int r = static_cast<int>(k % static_cast<std::size_t>(alg.nodes()));
    detail::check_relations_at(rep, k, alg, r, S, labels[k / static_cast<std::size_t>(alg.nodes())], true);
  }));
  return total;
}

/// S^tr against the U_q(A^{(1)}_{n-1}) R matrix: diagonal normalization on
/// |m e_n> (x) |l e_n> for m, l <= max_weight, and the intertwining relations
/// for every node on pair labels whose blocks have weight <= max_weight.
inline Report check_str_intertwining(int n, int max_weight, int order) {
  const AlgebraSpec alg{AlgebraType::A1, n};
  alg.validate();
  Report total{.id = "str-intertwining"};
  const PairOperator S = str_operator(n, order);
  const auto nn = static_cast<std::size_t>(n);
  {
    Report norm{.id = "slm"};
    std::size_t k = 0;
    for (int m = 0; m <= max_weight; ++m)
      for (int l = 0; l <= max_weight; ++l) {
        const MultiIndex ij = concat(unit_vector(nn, nn - 1, m), unit_vector(nn, nn - 1, l));
        Series num(Scalar(1), order);
        for (int t = 0; t < l; ++t)
          num *= Series::monomial(Scalar(1), {1}, order) - Series(Scalar::q_pow(m - l + 2 + 2 * t), order);
        Series den(Scalar(1), order);
        for (int t = 0; t <= l; ++t) den *= Series(Scalar(1), order) - Series::monomial(Scalar::q_pow(m - l + 2 * t), {1}, order);
        norm.expect_equal(S.column(ij).size() == 1 && S.column(ij)[0].first == ij ? S.column(ij)[0].second : Series(order),
                          num / den, k++, ij, "slm");
      }
    total.merge(norm);
  }
  const auto block = enumerate_sector(nn, {.max_degree = max_weight});
  std::vector<MultiIndex> labels;
  for (const auto& x : block)
    for (const auto& y : block) labels.push_back(concat(x, y));
  total.merge(parallel_sweep("str-intertwining", labels.size() * nn, [&](std::size_t k, Report& rep) {
    const int r = static_cast<int>(k % nn);
    detail::check_relations_at(rep, k, alg, r, S, labels[k / nn], false);
  }));
  return total;
}

}  // namespace tetra
