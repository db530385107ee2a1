/**
 * @file algebra.hpp
 * @brief Cartan data and q-oscillator representations of U_q(D^{(2)}_{n+1}),
 * U_q(A^{(2)}_{2n}), U_q(C^{(1)}_n) and U_q(A^{(1)}_{n-1}).
 *
 * Generators act on F^{(x)n} by monomial maps: a basis vector goes to a
 * multiple of one basis vector times a power of the spectral parameter x.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetra/fock.hpp"

namespace tetra {

enum class AlgebraType { D2, A2, C1, A1 };

inline std::string to_string(AlgebraType t) {
  switch (t) {
    case AlgebraType::D2: return "D2";
    case AlgebraType::A2: return "A2";
    case AlgebraType::C1: return "C1";
    case AlgebraType::A1: return "A1";
  }
  return "?";
}

inline AlgebraType parse_algebra(const std::string& s) {
  if (s == "D2") return AlgebraType::D2;
  if (s == "A2") return AlgebraType::A2;
  if (s == "C1") return AlgebraType::C1;
  if (s == "A1") return AlgebraType::A1;
  throw std::invalid_argument("unknown algebra type '" + s + "' (expected D2, A2, C1 or A1)");
}

struct AlgebraSpec {
  AlgebraType type = AlgebraType::D2;
  int n = 2;

  void validate() const {
    if (n < 1) throw std::invalid_argument("rank n must be >= 1");
    if (type == AlgebraType::A1 && n < 2) throw std::invalid_argument("A1 representation needs n >= 2");
  }

  /// At n = 1 both end nodes of D2 and C1 act on the same mode and the maps
  /// no longer satisfy the relations of the stated Cartan data.
  [[nodiscard]] bool is_representation() const {
    return !((type == AlgebraType::D2 || type == AlgebraType::C1) && n < 2);
  }

  /// Nodes are 0 .. nodes()-1.
  [[nodiscard]] int nodes() const { return type == AlgebraType::A1 ? n : n + 1; }

  /// q_i as a v-exponent (v = q^{1/2}).
  [[nodiscard]] int qv(int i) const {
    check_node(i);
    const bool end0 = i == 0;
    const bool endn = i == n && type != AlgebraType::A1;
    switch (type) {
      case AlgebraType::D2: return (end0 || endn) ? 1 : 2;
      case AlgebraType::A2: return end0 ? 1 : (endn ? 4 : 2);
      case AlgebraType::C1: return (end0 || endn) ? 4 : 2;
      case AlgebraType::A1: return 2;
    }
    return 2;
  }

  void check_node(int i) const {
    if (i < 0 || i >= nodes()) throw std::out_of_range("node " + std::to_string(i) + " outside 0.." + std::to_string(nodes() - 1));
  }
};

/// Generalized Cartan matrix a_{ij}.
inline std::vector<std::vector<int>> cartan(const AlgebraSpec& spec) {
  spec.validate();
  const int N = spec.nodes();
  std::vector<std::vector<int>> a(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N), 0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const int d = i > j ? i - j : j - i;
      if (i == j) {
        x = 2;
      } else if (spec.type == AlgebraType::A1) {
        x = -(d == 1 ? 1 : 0) - (d == spec.n - 1 ? 1 : 0);
      } else if (d == 1) {
        const int qi = spec.qv(i);
        const int qj = spec.qv(j);
        x = qj > qi ? -(qj / qi) : -1;
      }
    }
  return a;
}

enum class Gen { e, f, k, kinv };

inline std::string to_string(Gen g) {
  switch (g) {
    case Gen::e: return "e";
    case Gen::f: return "f";
    case Gen::k: return "k";
    case Gen::kinv: return "k^-1";
  }
  return "?";
}

struct GeneratorAction {
  Gen gen;
  int node;
};

/// One term c x^xexp |m>.
struct ActionTerm {
  MultiIndex m;
  Scalar c;
  int xexp = 0;
};

namespace detail {

inline Scalar qn(int m) { return qnum(m); }
inline Scalar kappa() { return Scalar::fraction(LaurentPoly::q_pow(1) + LaurentPoly(1), LaurentPoly::q_pow(1) - LaurentPoly(1)); }
inline Scalar two_step(int m) {  // [m][m-1]/[2]^2
  static const Scalar inv22 = (qnum(2) * qnum(2)).inverse();
  return qn(m) * qn(m - 1) * inv22;
}

inline std::optional<ActionTerm> term(MultiIndex m, std::size_t k, int shift, Scalar c, int xexp = 0) {
  if (c.is_zero()) return std::nullopt;
  m.at(k) += shift;
  if (m[k] < 0) throw std::logic_error("generator action left the Fock lattice");
  return ActionTerm{std::move(m), std::move(c), xexp};
}

inline std::optional<ActionTerm> hop(MultiIndex m, std::size_t from, std::size_t to, Scalar c, int xexp = 0) {
  if (c.is_zero()) return std::nullopt;
  m.at(from) -= 1;
  m.at(to) += 1;
  if (m[from] < 0) throw std::logic_error("generator action left the Fock lattice");
  return ActionTerm{std::move(m), std::move(c), xexp};
}

}  // namespace detail

/// Action of e_r, f_r or k_r^{+-1} on |m>; nullopt when the image is zero.
inline std::optional<ActionTerm> act(const AlgebraSpec& spec, Gen g, int r, const MultiIndex& m) {
  spec.check_node(r);
  const int n = spec.n;
  if (static_cast<int>(m.size()) != n) throw std::invalid_argument("label arity differs from the rank");
  if (g == Gen::kinv) {
    auto t = act(spec, Gen::k, r, m);
    t->c = t->c.inverse();
    return t;
  }
  using detail::hop;
  using detail::qn;
  using detail::term;
  const auto ui = [](int x) { return static_cast<std::size_t>(x); };
  if (spec.type == AlgebraType::A1) {
    // node j moves a quantum from mode j to mode j+1, modes counted mod n with mode 0 = mode n
    const std::size_t a = ui((r + n - 1) % n);
    const std::size_t b = ui(r % n);
    const int xe = r == 0 ? 1 : 0;
    switch (g) {
      case Gen::e: return hop(m, a, b, qn(m[a]), xe);
      case Gen::f: return hop(m, b, a, qn(m[b]), -xe);
      default: return ActionTerm{m, Scalar::q_pow(-m[a] + m[b]), 0};
    }
  }
  const Scalar i = Scalar::i();
  if (r > 0 && r < n) {
    const std::size_t a = ui(r - 1);
    const std::size_t b = ui(r);
    switch (g) {
      case Gen::e: return hop(m, a, b, qn(m[a]));
      case Gen::f: return hop(m, b, a, qn(m[b]));
      default: return ActionTerm{m, Scalar::q_pow(-m[a] + m[b]), 0};
    }
  }
  const std::size_t first = 0;
  const std::size_t last = ui(n - 1);
  if (r == 0) {
    const int m1 = m[first];
    if (spec.type == AlgebraType::C1) {
      switch (g) {
        case Gen::e: return term(m, first, 2, Scalar(1), 1);
        case Gen::f: return term(m, first, -2, detail::two_step(m1), -1);
        default: return ActionTerm{m, -Scalar::q_pow(2 * m1 + 1), 0};
      }
    }
    switch (g) {
      case Gen::e: return term(m, first, 1, Scalar(1), 1);
      case Gen::f: return term(m, first, -1, i * detail::kappa() * qn(m1), -1);
      default: return ActionTerm{m, -i * Scalar::v_pow(2 * m1 + 1), 0};
    }
  }
  const int mn = m[last];
  if (spec.type == AlgebraType::D2) {
    switch (g) {
      case Gen::e: return term(m, last, -1, i * detail::kappa() * qn(mn));
      case Gen::f: return term(m, last, 1, Scalar(1));
      default: return ActionTerm{m, i * Scalar::v_pow(-2 * mn - 1), 0};
    }
  }
  switch (g) {
    case Gen::e: return term(m, last, -2, detail::two_step(mn));
    case Gen::f: return term(m, last, 2, Scalar(1));
    default: return ActionTerm{m, -Scalar::q_pow(-2 * mn - 1), 0};
  }
}

/// The action as a state on labels m ++ (x exponent).
inline State rep_action(const AlgebraSpec& spec, GeneratorAction g, const MultiIndex& m) {
  spec.validate();
  State out;
  if (auto t = act(spec, g.gen, g.node, m)) {
    MultiIndex lab = t->m;
    lab.push_back(t->xexp);
    out.add(lab, t->c);
  }
  return out;
}

/// Largest total-level change of a single generator, used for truncation margins.
inline int level_raise(const AlgebraSpec& spec, Gen g, int r) {
  if (g == Gen::k || g == Gen::kinv) return 0;
  MultiIndex probe(static_cast<std::size_t>(spec.n), 3);
  auto t = act(spec, g, r, probe);
  return t ? weight(t->m) - weight(probe) : 0;
}

/// Delta(g) on |left> (x) |right> in V_x (x) V_y, labels left ++ right ++ (x exp, y exp).
inline State coproduct_action(const AlgebraSpec& spec, GeneratorAction g, const MultiIndex& left,
                              const MultiIndex& right) {
  spec.validate();
  State out;
  auto emit = [&](const std::optional<ActionTerm>& a, const std::optional<ActionTerm>& b, bool a_id, bool b_id) {
    if ((!a_id && !a) || (!b_id && !b)) return;
    MultiIndex lab = a_id ? left : a->m;
    MultiIndex rb = b_id ? right : b->m;
    lab.insert(lab.end(), rb.begin(), rb.end());
    lab.push_back(a_id ? 0 : a->xexp);
    lab.push_back(b_id ? 0 : b->xexp);
    out.add(lab, (a_id ? Scalar(1) : a->c) * (b_id ? Scalar(1) : b->c));
  };
  const int r = g.node;
  switch (g.gen) {
    case Gen::k:
    case Gen::kinv: emit(act(spec, g.gen, r, left), act(spec, g.gen, r, right), false, false); break;
    case Gen::e:
      emit(std::nullopt, act(spec, Gen::e, r, right), true, false);
      emit(act(spec, Gen::e, r, left), act(spec, Gen::k, r, right), false, false);
      break;
    case Gen::f:
      emit(act(spec, Gen::f, r, left), std::nullopt, false, true);
      emit(act(spec, Gen::kinv, r, left), act(spec, Gen::f, r, right), false, false);
      break;
  }
  return out;
}

}  // namespace tetra
