/**
 * @file identities.hpp
 * @brief Linear recursions and quadratic relations satisfied by the 3d R
 * elements. Each relation is evaluated as a residual that must vanish.
 */
#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "tetra/report.hpp"
#include "tetra/threedim_r/r_matrix.hpp"

namespace tetra {

namespace rid {

inline LaurentPoly R(int a, int b, int c, int i, int j, int k) { return r_element_poly({a, b, c, i, j, k}); }
inline LaurentPoly Q(int e) { return LaurentPoly::q_pow(e); }
/// 1 - q^e
inline LaurentPoly omq(int e) { return LaurentPoly(1) - Q(e); }
/// 1 + q^e
inline LaurentPoly opq(int e) { return LaurentPoly(1) + Q(e); }
inline LaurentPoly br(int m) { return qnum_poly(m); }

}  // namespace rid

using LinearRelation = std::function<LaurentPoly(const RIndex&)>;
/// Quadratic relation: unprimed (a,b,c,i,j,k) and primed (a',b',i',j',k').
using QuadraticRelation = std::function<LaurentPoly(const RIndex&, const std::array<int, 5>&)>;

inline const std::map<std::string, LinearRelation>& recursion_table() {
  using namespace rid;
  static const std::map<std::string, LinearRelation> t = {
      {"t11", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(i + k + 1) * omq(2 * j) * R(a, b, c, i, j - 1, k) - omq(2 * i) * omq(2 * k) * R(a, b, c, i - 1, j, k - 1)
              + omq(2 * b + 2) * R(a, b + 1, c, i, j, k); }},
      {"t12", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(k) * omq(2 * j) * R(a, b, c, i + 1, j - 1, k) + Q(i) * omq(2 * k) * R(a, b, c, i, j, k - 1)
              - Q(b) * omq(2 * c + 2) * R(a, b, c + 1, i, j, k); }},
      {"t21", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(i) * omq(2 * j) * R(a, b, c, i, j - 1, k + 1) + Q(k) * omq(2 * i) * R(a, b, c, i - 1, j, k)
              - Q(b) * omq(2 * a + 2) * R(a + 1, b, c, i, j, k); }},
      {"t22", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(1) * (Q(a + c) - Q(i + k)) * R(a, b, c, i, j, k) + omq(2 * j) * R(a, b, c, i + 1, j - 1, k + 1)
              - omq(2 * a + 2) * omq(2 * c + 2) * R(a + 1, b - 1, c + 1, i, j, k); }},
      {"t23", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(j) * R(a, b, c, i, j, k + 1) - Q(a) * R(a, b, c - 1, i, j, k)
              - Q(c) * omq(2 * a + 2) * R(a + 1, b - 1, c, i, j, k); }},
      {"t32", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(c) * R(a - 1, b, c, i, j, k) - Q(j) * R(a, b, c, i + 1, j, k)
              + Q(a) * omq(2 * c + 2) * R(a, b - 1, c + 1, i, j, k); }},
      {"t33", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(a + c + 1) * R(a, b - 1, c, i, j, k) - R(a - 1, b, c - 1, i, j, k) + R(a, b, c, i, j + 1, k); }},
      {"ti11", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(a + c + 1) * omq(2 * b + 2) * R(a, b + 1, c, i, j, k) + omq(2 * j) * R(a, b, c, i, j - 1, k)
              - omq(2 * a + 2) * omq(2 * c + 2) * R(a + 1, b, c + 1, i, j, k); }},
      {"ti12", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(j) * omq(2 * k) * R(a, b, c, i, j, k - 1) - Q(c) * omq(2 * b + 2) * R(a - 1, b + 1, c, i, j, k)
              - Q(a) * omq(2 * c + 2) * R(a, b, c + 1, i, j, k); }},
      {"ti21", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(j) * omq(2 * i) * R(a, b, c, i - 1, j, k) - Q(a) * omq(2 * b + 2) * R(a, b + 1, c - 1, i, j, k)
              - Q(c) * omq(2 * a + 2) * R(a + 1, b, c, i, j, k); }},
      {"ti22", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return omq(2 * b + 2) * R(a - 1, b + 1, c - 1, i, j, k) - omq(2 * i) * omq(2 * k) * R(a, b, c, i - 1, j + 1, k - 1)
              - Q(1) * (Q(a + c) - Q(i + k)) * R(a, b, c, i, j, k); }},
      {"ti23", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(i) * R(a, b, c, i, j, k + 1) - Q(b) * R(a, b, c - 1, i, j, k)
              + Q(k) * omq(2 * i) * R(a, b, c, i - 1, j + 1, k); }},
      {"ti32", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(b) * R(a - 1, b, c, i, j, k) - Q(i) * omq(2 * k) * R(a, b, c, i, j + 1, k - 1)
              - Q(k) * R(a, b, c, i + 1, j, k); }},
      {"ti33", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(i + k + 1) * R(a, b, c, i, j + 1, k) + R(a, b - 1, c, i, j, k) - R(a, b, c, i + 1, j, k + 1); }},
  };
  return t;
}

inline const std::map<std::string, LinearRelation>& linear_lemma_table() {
  using namespace rid;
  static const std::map<std::string, LinearRelation> t = {
      {"Li", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return omq(k) * R(a, b - 1, c, i, j, k - 1) + Q(b) * R(a - 1, b, c, i, j, k) - R(a, b, c, i + 1, j, k)
              - Q(i) * omq(k) * R(a, b, c, i, j + 1, k - 1); }},
      {"Ask", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return br(b + 1) * R(a, b + 1, c, i, j, k) + Q(-b) * opq(c + 1) * br(a + 1) * R(a + 1, b, c + 1, i, j, k)
              - opq(c + 1) * br(i) * R(a, b, c + 1, i - 1, j, k) - Q(-i) * br(j) * R(a, b, c, i, j - 1, k); }},
      {"Ngm", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return omq(2 * k) * R(a, b - 2, c, i, j, k - 2) + Q(2 * b) * R(a - 2, b, c, i, j, k) - R(a, b, c, i + 2, j, k)
              - Q(2 * i) * omq(2 * k) * R(a, b, c, i, j + 2, k - 2); }},
      {"Ymi", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return br(b + 2) * br(b + 1) * R(a, b + 2, c, i, j, k)
              + Q(-2 * b) * omq(2 * c + 2) * br(a + 2) * br(a + 1) * R(a + 2, b, c + 2, i, j, k)
              - omq(2 * c + 2) * br(i) * br(i - 1) * R(a, b, c + 2, i - 2, j, k)
              - Q(-2 * i) * br(j) * br(j - 1) * R(a, b, c, i, j - 2, k); }},
      {"hmk", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return Q(a + 1) * opq(c) * R(a, b - 1, c, i, j, k) - R(a - 1, b, c - 1, i, j, k)
              - Q(j + 1) * R(a, b, c - 1, i + 1, j, k) + opq(c) * R(a, b, c, i, j + 1, k); }},
      {"hnt", [](const RIndex& x) { auto [a, b, c, i, j, k] = x;
         return R(a - 2, b, c, i, j, k) + Q(2 * a + 2) * omq(2 * c + 2) * R(a, b - 2, c + 2, i, j, k)
              - omq(2 * c + 2) * R(a, b, c + 2, i, j + 2, k) - Q(2 * j + 2) * R(a, b, c, i + 2, j, k); }},
  };
  return t;
}

inline const std::map<std::string, QuadraticRelation>& quadratic_lemma_table() {
  using namespace rid;
  static const std::map<std::string, QuadraticRelation> t = {
      {"air", [](const RIndex& x, const std::array<int, 5>& p) { auto [a, b, c, i, j, k] = x;
         auto [a1, b1, i1, j1, k1] = p;
         return br(b1 + 1) * R(a, b - 1, c, i, j, k - 1) * R(a1, b1 + 1, k - 1, i1, j1, k1)
              + Q(b - b1) * br(a1 + 1) * R(a - 1, b, c, i, j, k) * R(a1 + 1, b1, k, i1, j1, k1)
              - br(i1) * R(a, b, c, i + 1, j, k) * R(a1, b1, k, i1 - 1, j1, k1)
              - Q(i - i1) * br(j1) * R(a, b, c, i, j + 1, k - 1) * R(a1, b1, k - 1, i1, j1 - 1, k1); }},
      {"szk", [](const RIndex& x, const std::array<int, 5>& p) { auto [a, b, c, i, j, k] = x;
         auto [a1, b1, i1, j1, k1] = p;
         return br(a + 1) * R(a + 1, b, c, i, j, k) * R(a1 - 1, b1, k, i1, j1, k1)
              + Q(a1 - a) * br(b + 1) * R(a, b + 1, c, i, j, k + 1) * R(a1, b1 - 1, k + 1, i1, j1, k1)
              - br(j) * R(a, b, c, i, j - 1, k + 1) * R(a1, b1, k + 1, i1, j1 + 1, k1)
              - Q(j1 - j) * br(i) * R(a, b, c, i - 1, j, k) * R(a1, b1, k, i1 + 1, j1, k1); }},
  };
  return t;
}

inline std::vector<std::string> recursion_ids() {
  std::vector<std::string> out;
  for (const auto& [k, v] : recursion_table()) out.push_back(k);
  return out;
}
inline std::vector<std::string> lemma_ids() { return {"Li", "Ask", "Ngm", "Ymi", "air", "hmk", "hnt", "szk"}; }

/// Residual of a named recursion at one index tuple.
inline LaurentPoly recursion_residual(const std::string& id, const RIndex& x) {
  auto it = recursion_table().find(id);
  if (it == recursion_table().end()) throw std::invalid_argument("unknown recursion id: " + id);
  return it->second(x);
}

inline RIndex decode_index(std::size_t n, int range) {
  const auto side = static_cast<std::size_t>(range + 1);
  int v[6];
  for (int t = 5; t >= 0; --t) {
    v[t] = static_cast<int>(n % side);
    n /= side;
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

inline std::size_t power(std::size_t b, int e) {
  std::size_t r = 1;
  for (int t = 0; t < e; ++t) r *= b;
  return r;
}

/// Sweeps a recursion over all six indices in [0, range].
inline Report check_recursion(const std::string& id, int range) {
  const LinearRelation& rel = [&]() -> const LinearRelation& {
    auto it = recursion_table().find(id);
    if (it == recursion_table().end()) throw std::invalid_argument("unknown recursion id: " + id);
    return it->second;
  }();
  return parallel_sweep("recursion-" + id, power(static_cast<std::size_t>(range + 1), 6), [&](std::size_t n, Report& rep) {
    RIndex x = decode_index(n, range);
    rep.expect_equal(rel(x), LaurentPoly(), n, x.as_vector(), id);
  });
}

/// Index tuples at which a lemma identity is a valid statement. The two-step
/// relation Ngm is obtained by applying the k-lowering recursion twice and
/// fails at k = 1, where the intermediate index k - 2 leaves the lattice while
/// its coefficient 1 - q^{2k} does not vanish.
inline bool lemma_domain(const std::string& id, const RIndex& x) { return !(id == "Ngm" && x.k == 1); }

/// Sweeps a lemma identity: linear ones over six indices in [0, range], quadratic
/// ones over unprimed and primed tuples both in [0, range]. With `literal`
/// set, points outside lemma_domain are checked too instead of skipped.
inline Report check_lemma_identity(const std::string& id, int range, bool literal = false) {
  const std::size_t side = static_cast<std::size_t>(range + 1);
  if (auto it = linear_lemma_table().find(id); it != linear_lemma_table().end()) {
    const auto& rel = it->second;
    return parallel_sweep("lemma-" + id, power(side, 6), [&](std::size_t n, Report& rep) {
      RIndex x = decode_index(n, range);
      if (!literal && !lemma_domain(id, x)) {
        ++rep.skipped;
        return;
      }
      rep.expect_equal(rel(x), LaurentPoly(), n, x.as_vector(), id);
    });
  }
  if (auto it = quadratic_lemma_table().find(id); it != quadratic_lemma_table().end()) {
    const auto& rel = it->second;
    const std::size_t primed = power(side, 5);
    return parallel_sweep("lemma-" + id, power(side, 6), [&](std::size_t n, Report& rep) {
      RIndex x = decode_index(n, range);
      for (std::size_t m = 0; m < primed; ++m) {
        std::array<int, 5> p{};
        std::size_t y = m;
        for (int t = 4; t >= 0; --t) {
          p[static_cast<std::size_t>(t)] = static_cast<int>(y % side);
          y /= side;
        }
        std::vector<int> idx = x.as_vector();
        idx.insert(idx.end(), p.begin(), p.end());
        rep.expect_equal(rel(x, p), LaurentPoly(), n * primed + m, idx, id);
      }
    });
  }
  throw std::invalid_argument("unknown lemma id: " + id);
}

}  // namespace tetra
