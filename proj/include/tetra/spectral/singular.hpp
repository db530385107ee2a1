/**
 * @file singular.hpp
 * @brief Singular vectors of V (x) V under the classical subalgebra generated
 * by e_1, ..., e_n: closed forms, verification, and an exact null-space search
 * over a weight sector.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tetra/qgroup.hpp"

namespace tetra {

/// B: U_q(B_n) vectors v_l. C: U_q(C_n) vectors v^eps_l (l = 0, eps = - is v^-_0).
/// A2pair: v^+_l + eps v^-_l for l >= 1, and v^eps_0 at l = 0.
enum class SingularFamily { B, C, A2pair };

inline std::string to_string(SingularFamily f) {
  switch (f) {
    case SingularFamily::B: return "B";
    case SingularFamily::C: return "C";
    case SingularFamily::A2pair: return "A2pair";
  }
  return "?";
}

using Block = std::pair<int, int>;

struct SingularVector {
  SingularFamily family = SingularFamily::B;
  int l = 0;
  int eps = 0;
  int n = 1;
  State state;  ///< labels m ++ m'
  std::optional<Block> block;
  std::string name;
};

namespace detail {

inline int sign_of_parity(int w) { return w % 2 == 0 ? 1 : -1; }

inline Block block_of(const MultiIndex& mm, std::size_t n) {
  return Block{sign_of_parity(weight(mm, 0, n)), sign_of_parity(weight(mm, n, n))};
}

/// v^eps_l of the C family.
inline State c_vector(int l, int eps, std::size_t n) {
  State s;
  const int p = eps > 0 ? 0 : 1;
  for (int k = p; k <= l; k += 2)
    s.add(concat(unit_vector(n, n - 1, k), unit_vector(n, n - 1, l - k)),
          Scalar::v_pow(k * (2 * l - k - 1)) * qbinom_sym(l, k));
  return s;
}

inline State c_special(std::size_t n) {
  State s(concat(unit_vector(n, n - 2), unit_vector(n, n - 1)), Scalar(1));
  s.add(concat(unit_vector(n, n - 1), unit_vector(n, n - 2)), -Scalar::q_pow(1));
  return s;
}

}  // namespace detail

/// The closed-form singular vectors.
inline SingularVector singular_vector(SingularFamily family, int l, int eps, int n) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  if (l < 0) throw std::invalid_argument("singular vector label l must be >= 0");
  const auto nn = static_cast<std::size_t>(n);
  SingularVector v{.family = family, .l = l, .eps = eps, .n = n};
  const std::string es = eps > 0 ? "+" : "-";
  switch (family) {
    case SingularFamily::B: {
      if (eps != 0) throw std::invalid_argument("B family singular vectors carry no sign");
      for (int k = 0; k <= l; ++k)
        v.state.add(concat(unit_vector(nn, nn - 1, k), unit_vector(nn, nn - 1, l - k)),
                    Scalar::i().pow(k) * Scalar::v_pow(2 * l * k - k * k) * qbinom_sym(l, k));
      v.name = "v_" + std::to_string(l);
      return v;
    }
    case SingularFamily::C: {
      if (eps != 1 && eps != -1) throw std::invalid_argument("C family needs eps = +1 or -1");
      if (l == 0 && eps < 0) {
        if (n < 2) throw std::invalid_argument("v^-_0 needs n >= 2");
        v.state = detail::c_special(nn);
        v.block = Block{-1, -1};
      } else {
        v.state = detail::c_vector(l, eps, nn);
        v.block = Block{eps, eps * (l % 2 == 0 ? 1 : -1)};
      }
      v.name = "v^" + es + "_" + std::to_string(l);
      return v;
    }
    case SingularFamily::A2pair: {
      if (eps != 1 && eps != -1) throw std::invalid_argument("A2 pairs need eps = +1 or -1");
      if (l == 0) {
        v.state = singular_vector(SingularFamily::C, 0, eps, n).state;
        v.name = "v^" + es + "_0";
      } else {
        v.state = detail::c_vector(l, 1, nn);
        v.state.add_scaled(Scalar(eps), detail::c_vector(l, -1, nn));
        v.name = "v^+_" + std::to_string(l) + " " + es + " v^-_" + std::to_string(l);
      }
      return v;
    }
  }
  throw std::invalid_argument("unknown singular family");
}

/// The family whose vectors are singular for the classical part of an algebra.
inline SingularFamily classical_family(AlgebraType t) {
  switch (t) {
    case AlgebraType::D2: return SingularFamily::B;
    case AlgebraType::A2:
    case AlgebraType::C1: return SingularFamily::C;
    case AlgebraType::A1: break;
  }
  throw std::invalid_argument("no classical singular vectors are modelled for " + to_string(t));
}

/// Delta(e_j) v for one classical node j, labels m ++ m'.
inline State classical_e(const AlgebraSpec& spec, int j, const State& v) {
  const auto n = static_cast<std::size_t>(spec.n);
  State out;
  for (const auto& [mm, c] : v.terms()) {
    const State img = coproduct_action(spec, {Gen::e, j}, slice(mm, 0, n), slice(mm, n, n));
    for (const auto& [lab, d] : img.terms()) out.add(MultiIndex(lab.begin(), lab.end() - 2), c * d);
  }
  return out;
}

/// Delta(e_j) v = 0 for j = 1..n.
inline Report verify_singular(const AlgebraSpec& spec, const SingularVector& v) {
  spec.validate();
  if (spec.n != v.n) throw std::invalid_argument("singular vector rank differs from the algebra rank");
  Report rep{.id = "singular:" + v.name};
  for (int j = 1; j <= spec.n; ++j)
    rep.expect_equal(classical_e(spec, j, v.state), State(), static_cast<std::size_t>(j), {j}, "e" + std::to_string(j));
  return rep;
}

struct FoundSingular {
  std::optional<Block> block;
  State state;
};

namespace detail {

/// Basis of the null space of a dense matrix over Scalar.
inline std::vector<std::vector<Scalar>> null_space(std::vector<std::vector<Scalar>> a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Scalar inv = a[row][c].inverse();
    for (auto& x : a[row]) x = x * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const Scalar f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        if (!a[row][k].is_zero()) a[r][k] = a[r][k] - f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<Scalar>> out;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(cols);
    x[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail

/// Every singular vector of the given weight, solved exactly. For the C-type
/// classical parts the sector is split by the parity blocks of the two factors.
inline std::vector<FoundSingular> find_singular(const AlgebraSpec& spec, const MultiIndex& wt) {
  spec.validate();
  const SingularFamily fam = classical_family(spec.type);
  const auto n = static_cast<std::size_t>(spec.n);
  if (wt.size() != n) throw std::invalid_argument("weight arity differs from the rank");
  for (int x : wt)
    if (x < 0) throw std::invalid_argument("weight sector must have nonnegative entries");
  std::map<std::optional<Block>, std::vector<MultiIndex>> sectors;
  for (const auto& m : enumerate_sector(n, {.max_degree = weight(wt)})) {
    bool inside = true;
    for (std::size_t r = 0; r < n; ++r) inside = inside && m[r] <= wt[r];
    if (!inside) continue;
    MultiIndex rest(n);
    for (std::size_t r = 0; r < n; ++r) rest[r] = wt[r] - m[r];
    MultiIndex mm = concat(m, rest);
    std::optional<Block> blk;
    if (fam == SingularFamily::C) blk = detail::block_of(mm, n);
    sectors[blk].push_back(std::move(mm));
  }
  std::vector<FoundSingular> out;
  for (const auto& [blk, basis] : sectors) {
    std::map<MultiIndex, std::size_t> rows;
    std::vector<std::vector<Scalar>> a;
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (int j = 1; j <= spec.n; ++j) {
        const State img = classical_e(spec, j, State(basis[c], Scalar(1)));
        for (const auto& [lab, d] : img.terms()) {
          MultiIndex key = lab;
          key.push_back(j);
          auto [it, fresh] = rows.try_emplace(key, a.size());
          if (fresh) a.emplace_back(basis.size());
          a[it->second][c] = d;
        }
      }
    for (const auto& x : detail::null_space(std::move(a), basis.size())) {
      FoundSingular f{blk, {}};
      for (std::size_t c = 0; c < basis.size(); ++c) f.state.add(basis[c], x[c]);
      out.push_back(std::move(f));
    }
  }
  return out;
}

/// The closed-form list for one weight sector.
inline std::vector<SingularVector> expected_singular(AlgebraType t, const MultiIndex& wt) {
  const auto n = wt.size();
  const int w = weight(wt);
  const bool on_en = wt[n - 1] == w;
  std::vector<SingularVector> out;
  if (classical_family(t) == SingularFamily::B) {
    if (on_en) out.push_back(singular_vector(SingularFamily::B, w, 0, static_cast<int>(n)));
    return out;
  }
  if (on_en)
    for (int eps : {1, -1})
      if (w >= (eps > 0 ? 0 : 1)) out.push_back(singular_vector(SingularFamily::C, w, eps, static_cast<int>(n)));
  if (n >= 2 && wt == concat(unit_vector(n - 1, n - 2), MultiIndex{1}))
    out.push_back(singular_vector(SingularFamily::C, 0, -1, static_cast<int>(n)));
  return out;
}

/// True when a = lambda b for a nonzero scalar lambda.
inline bool proportional(const State& a, const State& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [lab, cb] = *b.terms().begin();
  const Scalar ca = a.coeff(lab);
  if (ca.is_zero()) return false;
  State scaled;
  scaled.add_scaled(ca * cb.inverse(), b);
  return scaled == a;
}

/// find_singular against the closed-form list on every weight sector of total
/// weight <= max_weight.
inline Report check_singular_completeness(const AlgebraSpec& spec, int max_weight) {
  spec.validate();
  const auto sectors = enumerate_sector(static_cast<std::size_t>(spec.n), {.max_degree = max_weight});
  return parallel_sweep("singular:" + to_string(spec.type), sectors.size(), [&](std::size_t k, Report& rep) {
    const auto& wt = sectors[k];
    auto found = find_singular(spec, wt);
    auto want = expected_singular(spec.type, wt);
    bool ok = found.size() == want.size();
    for (const auto& w : want) {
      bool hit = false;
      for (const auto& f : found) hit = hit || (f.block == w.block && proportional(f.state, w.state));
      ok = ok && hit && verify_singular(spec, w).pass();
    }
    if (ok) {
      rep.ok();
      return;
    }
    std::string got, exp;
    for (const auto& f : found) got += (got.empty() ? "" : "; ") + f.state.str();
    for (const auto& w : want) exp += (exp.empty() ? "" : "; ") + w.name + " = " + w.state.str();
    rep.fail({k, wt, "singular vectors of weight " + to_string(wt), got.empty() ? "none" : got,
              exp.empty() ? "none" : exp});
  });
}

}  // namespace tetra
