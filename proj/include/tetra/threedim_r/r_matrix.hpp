/**
 * @file r_matrix.hpp
 * @brief Matrix elements of the 3d R operator on F^{(x)3} and its action on
 * tensor legs of a multi-factor state.
 */
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "tetra/fock.hpp"

namespace tetra {

struct RIndex {
  int a = 0, b = 0, c = 0;  ///< outgoing triple
  int i = 0, j = 0, k = 0;  ///< incoming triple

  [[nodiscard]] std::vector<int> as_vector() const { return {a, b, c, i, j, k}; }
  [[nodiscard]] bool conserving() const { return a + b == i + j && b + c == j + k; }
};

namespace detail {

inline LaurentPoly r_element_uncached(const RIndex& x) {
  const auto [a, b, c, i, j, k] = x;
  LaurentPoly sum;
  for (int mu = std::max(0, b - j); mu <= std::min(i, b); ++mu) {
    const int lambda = b - mu;
    const int qexp = i * (c - j) + (k + 1) * lambda + mu * (mu - k);
    LaurentPoly term = poch_ratio_poly(c + mu, c, 4) * qbinom_poly(i, mu, 4) * qbinom_poly(j, lambda, 4);
    term = term.shifted(2 * qexp);
    if (lambda % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

inline bool packable(const RIndex& x) {
  for (int v : {x.a, x.b, x.c, x.i, x.j, x.k})
    if (v >= 1024) return false;
  return true;
}

inline std::uint64_t pack(const RIndex& x) {
  std::uint64_t key = 0;
  for (int v : {x.a, x.b, x.c, x.i, x.j, x.k}) key = (key << 10U) | static_cast<std::uint64_t>(v);
  return key;
}

}  // namespace detail

/// R^{a,b,c}_{i,j,k} as a Laurent polynomial in v (even exponents only).
/// Indices outside Z>=0 give zero. Values are memoized per thread.
inline const LaurentPoly& r_element_poly(const RIndex& x) {
  static const LaurentPoly zero;
  if (x.a < 0 || x.b < 0 || x.c < 0 || x.i < 0 || x.j < 0 || x.k < 0) return zero;
  if (!x.conserving()) return zero;
  if (!detail::packable(x)) {
    thread_local LaurentPoly scratch;
    scratch = detail::r_element_uncached(x);
    return scratch;
  }
  thread_local std::unordered_map<std::uint64_t, LaurentPoly> cache;
  const std::uint64_t key = detail::pack(x);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, detail::r_element_uncached(x)).first->second;
}

inline Scalar r_element(const RIndex& x) { return r_element_poly(x); }
inline Scalar r_element(int a, int b, int c, int i, int j, int k) { return r_element({a, b, c, i, j, k}); }

/// Nonzero R^{a,b,c}_{i,j,k} for fixed incoming (i,j,k): calls f(a, b, c, value).
template <typename F>
void for_each_r_output(int i, int j, int k, F&& f) {
  for (int b = 0; b <= std::min(i + j, j + k); ++b) {
    const RIndex x{i + j - b, b, j + k - b, i, j, k};
    const LaurentPoly& v = r_element_poly(x);
    if (!v.is_zero()) f(x.a, x.b, x.c, v);
  }
}

/// Applies R to the legs (p, q, r) of every term of a state over F^{(x)m}.
template <typename C>
VectorState<C> r_apply(const VectorState<C>& state, std::size_t p, std::size_t q, std::size_t r) {
  if (p == q || q == r || p == r) throw std::invalid_argument("r_apply: legs must be distinct");
  VectorState<C> out;
  for (const auto& [m, coeff] : state.terms()) {
    if (std::max({p, q, r}) >= m.size()) throw std::invalid_argument("r_apply: leg out of range");
    for_each_r_output(m[p], m[q], m[r], [&](int a, int b, int c, const LaurentPoly& v) {
      MultiIndex o = m;
      o[p] = a;
      o[q] = b;
      o[r] = c;
      out.add(o, Scalar(v) * coeff);
    });
  }
  return out;
}

/// R as a graded operator on F^{(x)3} with its two conservation laws.
inline GradedOperator<Scalar> r_operator() {
  return {[](const MultiIndex& m) {
            if (m.size() != 3) throw std::invalid_argument("R acts on F^{(x)3}");
            State s(m, Scalar(1));
            return r_apply(s, 0, 1, 2);
          },
          {{{1, 1, 0}, "a+b=i+j"}, {{0, 1, 1}, "b+c=j+k"}},
          "R"};
}

}  // namespace tetra
