/**
 * @file s_matrix.hpp
 * @brief Yang-Baxter solutions S^{s,t}(z) and S^tr(z) obtained by contracting
 * n-fold products of the 3d R operator along an auxiliary Fock space.
 *
 * An element S^{a,b}_{i,j} is a power series in z. Labels a, b, i, j are
 * MultiIndex values of arity n; an operator input is the concatenation i ++ j.
 */
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "tetra/fock.hpp"
#include "tetra/threedim_r/r_matrix.hpp"

namespace tetra {

struct SSpec {
  int s = 1;
  int t = 1;
  int n = 1;
  int order = Series::kDefaultOrder;
  /// (eps1, eps2) with entries +1 or -1; restricts (2,2) to one parity block.
  std::optional<std::pair<int, int>> parity;
  /// Multiply by the normalization series rho^{s,t}.
  bool normalized = true;

  void validate() const {
    if ((s != 1 && s != 2) || (t != 1 && t != 2)) throw std::invalid_argument("s and t must be 1 or 2");
    if (n < 1) throw std::invalid_argument("rank n must be >= 1");
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    if (parity) {
      if (s != 2 || t != 2) throw std::invalid_argument("parity blocks exist only for (s,t) = (2,2)");
      auto ok = [](int e) { return e == 1 || e == -1; };
      if (!ok(parity->first) || !ok(parity->second)) throw std::invalid_argument("parity entries must be +1 or -1");
    }
  }
};

/// rho^{s,t}(z) to the given order. For (2,2) the sign eps = eps1 * eps2
/// selects the block; (2,1) uses rho^{1,2}(z^{1/2}).
inline Series rho_normalizer(int s, int t, int eps, int order) {
  const Scalar one(1);
  const Scalar mq = -Scalar::q_pow(1);
  if (s == 1 && t == 1) return qpoch_infinite_series(one, 1, 1, order) / qpoch_infinite_series(mq, 1, 1, order);
  if (s == 1 && t == 2) return qpoch_infinite_series(one, 2, 2, order) / qpoch_infinite_series(mq, 2, 2, order);
  if (s == 2 && t == 1) return qpoch_infinite_series(one, 1, 2, order) / qpoch_infinite_series(mq, 1, 2, order);
  if (s == 2 && t == 2) {
    Series a = qpoch_infinite_series(one, 1, 4, order);
    Series b = qpoch_infinite_series(Scalar::q_pow(2), 1, 4, order);
    return eps > 0 ? a / b : b / a;
  }
  throw std::invalid_argument("s and t must be 1 or 2");
}

/// Normalization of a spec; (2,2) without a parity block uses eps = +1.
inline Series rho_normalizer(const SSpec& spec) {
  spec.validate();
  int eps = spec.parity ? spec.parity->first * spec.parity->second : 1;
  return rho_normalizer(spec.s, spec.t, eps, spec.order);
}

namespace detail {

inline void check_arity(std::size_t n, const MultiIndex& a, const MultiIndex& b, const MultiIndex& i,
                        const MultiIndex& j) {
  if (a.size() != n || b.size() != n || i.size() != n || j.size() != n)
    throw std::invalid_argument("S element labels must all have arity n");
}

inline bool entrywise_conserved(const MultiIndex& a, const MultiIndex& b, const MultiIndex& i, const MultiIndex& j) {
  for (std::size_t r = 0; r < a.size(); ++r)
    if (a[r] + b[r] != i[r] + j[r]) return false;
  return true;
}

inline int parity_sign(int w) { return w % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// The single sum over c0 <= order without rho.
inline Series s_element_raw(int s, int t, const MultiIndex& a, const MultiIndex& b, const MultiIndex& i,
                            const MultiIndex& j, int order) {
  const std::size_t n = a.size();
  detail::check_arity(n, a, b, i, j);
  Series out(order);
  if (n == 0 || !detail::entrywise_conserved(a, b, i, j)) return out;
  for (int c0 = 0; c0 <= order; ++c0) {
    int c = s * c0;
    LaurentPoly prod(1);
    int cn = -1;
    for (std::size_t r = 0; r < n; ++r) {
      const int k = b[r] + c - j[r];
      if (k < 0) break;
      if (r + 1 == n && k % t != 0) break;
      const LaurentPoly& e = r_element_poly({a[r], b[r], c, i[r], j[r], k});
      if (e.is_zero()) break;
      prod *= e;
      c = k;
      if (r + 1 == n) cn = k / t;
    }
    if (cn < 0) continue;
    Scalar coeff = Scalar::fraction(prod * poch_ratio_poly(s * c0, 0, 4),
                                    poch_ratio_poly(c0, 0, 2 * s * s) * poch_ratio_poly(cn, 0, 2 * t * t));
    out.at(c0) = coeff;
  }
  return out;
}

/// S^{s,t}(z)^{a,b}_{i,j} as a series to spec.order.
inline Series s_element(const SSpec& spec, const MultiIndex& a, const MultiIndex& b, const MultiIndex& i,
                        const MultiIndex& j) {
  spec.validate();
  detail::check_arity(static_cast<std::size_t>(spec.n), a, b, i, j);
  Series zero(spec.order);
  if (!detail::entrywise_conserved(a, b, i, j)) return zero;
  int eps = 1;
  if (spec.s == 2 && spec.t == 2) {
    const int e1 = detail::parity_sign(weight(i));
    const int e2 = detail::parity_sign(weight(j));
    if (detail::parity_sign(weight(a)) != e1 || detail::parity_sign(weight(b)) != e2) return zero;
    if (spec.parity && (spec.parity->first != e1 || spec.parity->second != e2)) return zero;
    eps = e1 * e2;
  }
  Series raw = s_element_raw(spec.s, spec.t, a, b, i, j, spec.order);
  if (!spec.normalized || raw.is_zero()) return raw;
  return raw * rho_normalizer(spec.s, spec.t, eps, spec.order);
}

/// S^tr(z)^{a,b}_{i,j}: trace over the auxiliary space weighted by z^h.
inline Series str_element(const MultiIndex& a, const MultiIndex& b, const MultiIndex& i, const MultiIndex& j,
                          int order) {
  const std::size_t n = a.size();
  detail::check_arity(n, a, b, i, j);
  Series out(order);
  if (n == 0 || !detail::entrywise_conserved(a, b, i, j) || weight(a) != weight(i)) return out;
  for (int c0 = 0; c0 <= order; ++c0) {
    int c = c0;
    LaurentPoly prod(1);
    bool alive = true;
    for (std::size_t r = 0; r < n && alive; ++r) {
      const int k = b[r] + c - j[r];
      if (k < 0 || (r + 1 == n && k != c0)) {
        alive = false;
        break;
      }
      const LaurentPoly& e = r_element_poly({a[r], b[r], c, i[r], j[r], k});
      if (e.is_zero()) alive = false;
      else prod *= e;
      c = k;
    }
    if (alive) out.at(c0) = Scalar(std::move(prod));
  }
  return out;
}

/// Memoized operator on F^{(x)n} (x) F^{(x)n} given elementwise. Outputs of an
/// input i ++ j range over a ++ b with a + b = i + j entrywise.
class PairOperator {
 public:
  using Element = std::function<Series(const MultiIndex&, const MultiIndex&, const MultiIndex&, const MultiIndex&)>;
  using Column = std::vector<std::pair<MultiIndex, Series>>;

  PairOperator(int n, int order, Element element, std::string name)
      : n_(n), order_(order), element_(std::move(element)), name_(std::move(name)) {}

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }

  /// Nonzero elements in the column of the input label i ++ j, sorted by output label.
  const Column& column(const MultiIndex& ij) const {
    {
      std::lock_guard<std::mutex> lock(state_->mutex);
      auto it = state_->cache.find(ij);
      if (it != state_->cache.end()) return it->second;
    }
    Column col = compute(ij);
    std::lock_guard<std::mutex> lock(state_->mutex);
    return state_->cache.try_emplace(ij, std::move(col)).first->second;
  }

  [[nodiscard]] VectorState<Series> apply(const MultiIndex& ij) const {
    VectorState<Series> out;
    for (const auto& [ab, ser] : column(ij)) out.add(ab, ser);
    return out;
  }

  [[nodiscard]] GradedOperator<Series> as_operator() const {
    std::vector<Conservation> laws;
    for (int r = 0; r < n_; ++r) {
      std::vector<int> w(static_cast<std::size_t>(2 * n_), 0);
      w[static_cast<std::size_t>(r)] = 1;
      w[static_cast<std::size_t>(n_ + r)] = 1;
      laws.push_back({w, "a_" + std::to_string(r + 1) + " + b_" + std::to_string(r + 1)});
    }
    PairOperator self = *this;
    return {[self](const MultiIndex& m) { return self.apply(m); }, laws, name_};
  }

 private:
  Column compute(const MultiIndex& ij) const {
    const auto n = static_cast<std::size_t>(n_);
    if (ij.size() != 2 * n) throw std::invalid_argument(name_ + ": input label must have arity 2n");
    const MultiIndex i = slice(ij, 0, n);
    const MultiIndex j = slice(ij, n, n);
    Column col;
    MultiIndex a(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
      if (r == n) {
        MultiIndex b(n);
        for (std::size_t t = 0; t < n; ++t) b[t] = i[t] + j[t] - a[t];
        Series e = element_(a, b, i, j);
        if (!e.is_zero()) col.emplace_back(concat(a, b), std::move(e));
        return;
      }
      for (int v = 0; v <= i[r] + j[r]; ++v) {
        a[r] = v;
        rec(r + 1);
      }
    };
    rec(0);
    return col;
  }

  struct Shared {
    std::mutex mutex;
    std::map<MultiIndex, Column> cache;
  };

  int n_;
  int order_;
  Element element_;
  std::string name_;
  std::shared_ptr<Shared> state_ = std::make_shared<Shared>();
};

inline PairOperator s_operator(const SSpec& spec) {
  spec.validate();
  std::string name = "S^{" + std::to_string(spec.s) + "," + std::to_string(spec.t) + "}";
  return PairOperator(
      spec.n, spec.order,
      [spec](const MultiIndex& a, const MultiIndex& b, const MultiIndex& i, const MultiIndex& j) {
        return s_element(spec, a, b, i, j);
      },
      name);
}

inline PairOperator str_operator(int n, int order) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  return PairOperator(
      n, order,
      [order](const MultiIndex& a, const MultiIndex& b, const MultiIndex& i, const MultiIndex& j) {
        return str_element(a, b, i, j, order);
      },
      "S^tr");
}

/// Columns of S^{s,t} for every input label i ++ j in the sector.
inline std::map<MultiIndex, VectorState<Series>> s_matrix(const SSpec& spec, const SectorConstraint& sector) {
  PairOperator op = s_operator(spec);
  std::map<MultiIndex, VectorState<Series>> out;
  const auto n = static_cast<std::size_t>(spec.n);
  for (const auto& ij : enumerate_sector(2 * n, sector)) {
    if (spec.parity) {
      if (detail::parity_sign(weight(ij, 0, n)) != spec.parity->first) continue;
      if (detail::parity_sign(weight(ij, n, n)) != spec.parity->second) continue;
    }
    out.emplace(ij, op.apply(ij));
  }
  return out;
}

}  // namespace tetra
