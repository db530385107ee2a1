/**
 * @file relations.hpp
 * @brief Defining relations of the quantum affine algebra checked on the
 * q-oscillator representation, basis vector by basis vector.
 */
#pragma once

#include <algorithm>

#include "tetra/qgroup/algebra.hpp"
#include "tetra/report.hpp"

namespace tetra {

/// Generator applied to a state on labels m ++ (x exponent).
inline State apply_generator(const AlgebraSpec& spec, Gen g, int r, const State& s) {
  State out;
  for (const auto& [lab, c] : s.terms()) {
    MultiIndex m(lab.begin(), lab.end() - 1);
    if (auto t = act(spec, g, r, m)) {
      MultiIndex o = t->m;
      o.push_back(lab.back() + t->xexp);
      out.add(o, c * t->c);
    }
  }
  return out;
}

/// Applies letters right to left: word = {g_1, ..., g_k} means g_1 ... g_k.
inline State apply_word(const AlgebraSpec& spec, const std::vector<std::pair<Gen, int>>& word, State s) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) s = apply_generator(spec, it->first, it->second, s);
  return s;
}

/// Margin needed so that no relation word leaves |m| <= cutoff.
inline int required_margin(const AlgebraSpec& spec) {
  const auto a = cartan(spec);
  const int N = spec.nodes();
  auto up = [&](Gen g, int r) { return std::max(0, level_raise(spec, g, r)); };
  int need = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      need = std::max({need, up(Gen::e, i) + up(Gen::f, j), up(Gen::f, i) + up(Gen::e, j)});
      if (i == j) continue;
      const int len = 1 - a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      need = std::max({need, len * up(Gen::e, i) + up(Gen::e, j), len * up(Gen::f, i) + up(Gen::f, j)});
    }
  return need;
}

/// Every relation of the algebra on all |m> with |m| <= cutoff - margin.
inline Report check_defining_relations(const AlgebraSpec& spec, int cutoff, int margin) {
  spec.validate();
  if (!spec.is_representation())
    throw std::invalid_argument(to_string(spec.type) + " relations are checked for n >= 2 only");
  const int need = required_margin(spec);
  if (margin < need)
    throw std::invalid_argument("margin " + std::to_string(margin) + " below the required " + std::to_string(need) +
                                " for " + to_string(spec.type));
  if (cutoff - margin < 0) throw std::invalid_argument("cutoff smaller than the margin");
  const auto a = cartan(spec);
  const int N = spec.nodes();
  const auto labels = enumerate_sector(static_cast<std::size_t>(spec.n), {.max_degree = cutoff - margin});
  return parallel_sweep("relations:" + to_string(spec.type), labels.size(), [&](std::size_t k, Report& rep) {
    MultiIndex lab = labels[k];
    lab.push_back(0);
    const State v(lab, Scalar(1));
    const auto& idx = labels[k];
    auto word = [&](std::vector<std::pair<Gen, int>> w) { return apply_word(spec, w, v); };
    for (int i = 0; i < N; ++i) {
      const std::string si = std::to_string(i);
      const Scalar qi = Scalar::v_pow(spec.qv(i));
      rep.expect_equal(word({{Gen::k, i}, {Gen::kinv, i}}), v, k, idx, "k" + si + " k" + si + "^-1 = 1");
      rep.expect_equal(word({{Gen::kinv, i}, {Gen::k, i}}), v, k, idx, "k" + si + "^-1 k" + si + " = 1");
      for (int j = 0; j < N; ++j) {
        const std::string sj = std::to_string(j);
        const int aij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        rep.expect_equal(word({{Gen::k, i}, {Gen::k, j}}), word({{Gen::k, j}, {Gen::k, i}}), k, idx,
                         "[k" + si + ", k" + sj + "] = 0");
        rep.expect_equal(word({{Gen::k, i}, {Gen::e, j}, {Gen::kinv, i}}), qi.pow(aij) * word({{Gen::e, j}}), k, idx,
                         "k" + si + " e" + sj + " k" + si + "^-1");
        rep.expect_equal(word({{Gen::k, i}, {Gen::f, j}, {Gen::kinv, i}}), qi.pow(-aij) * word({{Gen::f, j}}), k, idx,
                         "k" + si + " f" + sj + " k" + si + "^-1");
        State comm = word({{Gen::e, i}, {Gen::f, j}}) - word({{Gen::f, j}, {Gen::e, i}});
        State expect;
        if (i == j) expect = (qi - qi.inverse()).inverse() * (word({{Gen::k, i}}) - word({{Gen::kinv, i}}));
        rep.expect_equal(comm, expect, k, idx, "[e" + si + ", f" + sj + "]");
        if (i == j) continue;
        const int len = 1 - aij;
        for (Gen g : {Gen::e, Gen::f}) {
          State serre;
          for (int nu = 0; nu <= len; ++nu) {
            std::vector<std::pair<Gen, int>> w(static_cast<std::size_t>(len - nu), {g, i});
            w.emplace_back(g, j);
            w.insert(w.end(), static_cast<std::size_t>(nu), {g, i});
            Scalar c = (qfact(len - nu, spec.qv(i)) * qfact(nu, spec.qv(i))).inverse();
            serre.add_scaled(nu % 2 ? -c : c, word(w));
          }
          rep.expect_equal(serre, State(), k, idx, "serre " + to_string(g) + " (" + si + "," + sj + ")");
        }
      }
    }
  });
}

}  // namespace tetra
