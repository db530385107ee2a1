/**
 * @file fock.hpp
 * @brief Basis labels of F^{(x)n}, finite linear combinations, the pairing,
 * sector enumeration and sparse operators with checked conservation laws.
 *
 * A tensor product of several Fock factors is addressed by one flat
 * MultiIndex; which entries belong to which factor is a convention of the
 * caller.
 */
#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tetra/ring/qsymbols.hpp"

namespace tetra {

using MultiIndex = std::vector<int>;

inline int weight(const MultiIndex& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Sum of entries [from, from + len).
inline int weight(const MultiIndex& m, std::size_t from, std::size_t len) {
  int s = 0;
  for (std::size_t k = from; k < from + len; ++k) s += m[k];
  return s;
}

inline MultiIndex unit_vector(std::size_t n, std::size_t k, int mult = 1) {
  MultiIndex e(n, 0);
  e.at(k) = mult;
  return e;
}

inline MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline MultiIndex slice(const MultiIndex& m, std::size_t from, std::size_t len) {
  return {m.begin() + static_cast<std::ptrdiff_t>(from), m.begin() + static_cast<std::ptrdiff_t>(from + len)};
}

inline std::string to_string(const MultiIndex& m) {
  std::string s = "(";
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? "," : "") + std::to_string(m[k]);
  return s + ")";
}

class ConservationViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Finite linear combination of basis vectors with coefficients in C
/// (Scalar or a truncated series). Terms are kept sorted by index.
template <typename C>
class VectorState {
 public:
  using Map = std::map<MultiIndex, C>;

  VectorState() = default;
  VectorState(const MultiIndex& m, C c) { add(m, std::move(c)); }

  void add(const MultiIndex& m, const C& c) {
    if (c.is_zero()) return;
    if (!terms_.empty() && arity() != m.size()) throw std::invalid_argument("arity mismatch in state");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += s * other
  template <typename S>
  void add_scaled(const S& s, const VectorState& other) {
    if (s.is_zero()) return;
    for (const auto& [m, c] : other.terms_) add(m, s * c);
  }

  [[nodiscard]] const Map& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      os << (first ? "" : " + ") << "[" << c << "]|" << to_string(m) << ">";
      first = false;
    }
    return os.str();
  }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] std::size_t arity() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

  [[nodiscard]] C coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero_like() : it->second;
  }

  VectorState& operator+=(const VectorState& b) {
    for (const auto& [m, c] : b.terms_) add(m, c);
    return *this;
  }
  VectorState& operator-=(const VectorState& b) {
    for (const auto& [m, c] : b.terms_) add(m, -c);
    return *this;
  }
  friend VectorState operator+(VectorState a, const VectorState& b) { return a += b; }
  friend VectorState operator-(VectorState a, const VectorState& b) { return a -= b; }

  template <typename S>
  friend VectorState operator*(const S& s, const VectorState& a) {
    VectorState r;
    r.add_scaled(s, a);
    return r;
  }

  friend bool operator==(const VectorState& a, const VectorState& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (it->first != m || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const VectorState& a, const VectorState& b) { return !(a == b); }

  /// Applies f(index) -> optional new index to every label (permutations, slicing).
  template <typename F>
  [[nodiscard]] VectorState relabel(F&& f) const {
    VectorState r;
    for (const auto& [m, c] : terms_) r.add(f(m), c);
    return r;
  }

 private:
  C zero_like() const {
    if constexpr (std::is_constructible_v<C, int>) return C(0);
    else return terms_.empty() ? C() : C(terms_.begin()->second.order());
  }

  Map terms_;
};

using State = VectorState<Scalar>;

/// Linear functional on labels: sum_k w_k m_k.
struct Conservation {
  std::vector<int> weights;
  std::string name;
  [[nodiscard]] int eval(const MultiIndex& m) const {
    int s = 0;
    for (std::size_t k = 0; k < weights.size() && k < m.size(); ++k) s += weights[k] * m[k];
    return s;
  }
};

/// Sparse operator given by its action on basis vectors, with declared
/// conservation laws checked on every emitted term.
template <typename C>
struct GradedOperator {
  std::function<VectorState<C>(const MultiIndex&)> rule;
  std::vector<Conservation> conserved;
  std::string name = "operator";

  [[nodiscard]] VectorState<C> on_basis(const MultiIndex& m) const {
    VectorState<C> out = rule(m);
    for (const auto& [o, c] : out.terms()) {
      if (o.size() != m.size()) throw std::invalid_argument(name + ": output arity differs from input");
      for (const auto& law : conserved) {
        if (law.eval(o) != law.eval(m))
          throw ConservationViolation(name + " violates " + law.name + " on " + to_string(m) + " -> " + to_string(o));
      }
    }
    return out;
  }
};

template <typename C>
VectorState<C> apply_operator(const GradedOperator<C>& op, const VectorState<C>& state) {
  VectorState<C> out;
  for (const auto& [m, c] : state.terms()) out.add_scaled(c, op.on_basis(m));
  return out;
}

template <typename C>
GradedOperator<C> identity_operator() {
  return {[](const MultiIndex& m) {
            if constexpr (std::is_constructible_v<C, int>) return VectorState<C>(m, C(1));
            else return VectorState<C>(m, C(Scalar(1), C::kDefaultOrder));
          },
          {},
          "identity"};
}

/// <m|n> = (q^2; q^2)_m delta_{mn} on a single factor, extended multiplicatively.
inline Scalar pairing(const MultiIndex& bra, const MultiIndex& ket) {
  if (bra != ket) return {};
  LaurentPoly r(1);
  for (int m : bra) r *= poch_ratio_poly(m, 0, 4);
  return r;
}
inline Scalar pairing(int bra, int ket) { return pairing(MultiIndex{bra}, MultiIndex{ket}); }

struct SectorConstraint {
  std::optional<int> weight;      ///< |m| = w
  std::optional<int> parity;      ///< |m| = parity mod 2 (0 or 1)
  std::optional<int> max_degree;  ///< |m| <= D
};

/// Complete, duplicate-free list of labels in (Z>=0)^n satisfying the constraint,
/// in lexicographic order.
inline std::vector<MultiIndex> enumerate_sector(std::size_t n, const SectorConstraint& c) {
  if (!c.weight && !c.max_degree) throw std::invalid_argument("enumerate_sector: unbounded sector");
  const int bound = c.weight ? *c.weight : *c.max_degree;
  std::vector<MultiIndex> out;
  if (bound < 0) return out;
  MultiIndex m(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int used) {
    if (pos == n) {
      if (c.weight && used != *c.weight) return;
      if (c.max_degree && used > *c.max_degree) return;
      if (c.parity && (used % 2) != (*c.parity % 2 + 2) % 2) return;
      out.push_back(m);
      return;
    }
    for (int v = 0; used + v <= bound; ++v) {
      m[pos] = v;
      rec(pos + 1, used + v);
    }
    m[pos] = 0;
  };
  if (n == 0) {
    if ((!c.weight || *c.weight == 0) && (!c.parity || *c.parity % 2 == 0)) out.push_back({});
    return out;
  }
  rec(0, 0);
  return out;
}

}  // namespace tetra
