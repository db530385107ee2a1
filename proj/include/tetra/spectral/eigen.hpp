/**
 * @file eigen.hpp
 * @brief Eigenvalues of P R(z) on singular vectors: the product formulas and
 * their check against R(z) = (K (x) 1) S^{s,t}(z) (1 (x) K^{-1}).
 */
#pragma once

#include "tetra/spectral/singular.hpp"

namespace tetra {

/// D2: l. A2: l with eps selecting v^+_l + eps v^-_l (at l = 0, v^eps_0).
/// C1: the singular vector v^eps_l itself; l = 0, eps = -1 is v^-_0.
struct SpectralLabel {
  int l = 0;
  int eps = 0;
};

inline std::string to_string(const SpectralLabel& s) {
  return "l=" + std::to_string(s.l) + (s.eps ? (s.eps > 0 ? ",eps=+" : ",eps=-") : "");
}

namespace detail {

/// prod_{j=1}^{count} (z + a_j)/(1 + a_j z), a_j = c v^{e0 + step (j-1)}.
inline Series mobius_product(const Scalar& c, int e0, int step, int count, int order, bool inverted = false) {
  Series r(Scalar(1), order);
  const Series one(Scalar(1), order);
  const Series z = Series::monomial(Scalar(1), {1}, order);
  for (int j = 0; j < count; ++j) {
    const Scalar a = c * Scalar::v_pow(e0 + step * j);
    Series num = z + Series(a, order);
    Series den = one + a * z;
    r *= inverted ? den / num : num / den;
  }
  return r;
}

inline void check_label(AlgebraType t, const SpectralLabel& s) {
  if (s.l < 0) throw std::invalid_argument("spectral label l must be >= 0");
  if (t == AlgebraType::D2 && s.eps != 0) throw std::invalid_argument("D2 labels carry no sign");
  if ((t == AlgebraType::A2 || t == AlgebraType::C1) && s.eps != 1 && s.eps != -1)
    throw std::invalid_argument(to_string(t) + " labels need eps = +1 or -1");
  if (t == AlgebraType::A1) throw std::invalid_argument("no spectral decomposition is modelled for A1");
}

}  // namespace detail

/// The eigenvalue product formula as a series in z. With inverted = true the
/// product part is evaluated at 1/z (reindexed into a power series).
inline Series eigenvalue_product(AlgebraType t, const SpectralLabel& s, int order, bool inverted = false) {
  detail::check_label(t, s);
  const Scalar i = Scalar::i();
  switch (t) {
    case AlgebraType::D2: return detail::mobius_product(Scalar(1), 2, 2, s.l, order, inverted);
    case AlgebraType::A2:
      // (z -+ i q^{j-1/2}) / (1 -+ i q^{j-1/2} z)
      return detail::mobius_product(-Scalar(s.eps) * i, 1, 2, s.l, order, inverted);
    case AlgebraType::C1: {
      if (s.l == 0) return Series(Scalar(1), order);
      if (s.l % 2 == 0) return detail::mobius_product(Scalar(-1), 4, 8, s.l / 2, order, inverted);
      Series p = detail::mobius_product(Scalar(-1), 8, 8, (s.l - 1) / 2, order, inverted);
      if (inverted) return p;
      const Series one(Scalar(1), order);
      return (-i * Scalar::v_pow(1)) * p / (one - Series::monomial(Scalar(1), {1}, order));
    }
    case AlgebraType::A1: break;
  }
  throw std::invalid_argument("no spectral decomposition is modelled for A1");
}

/// The singular vector a label refers to, and the vector P R(z) should send it to.
inline std::pair<SingularVector, SingularVector> spectral_vectors(AlgebraType t, const SpectralLabel& s, int n) {
  detail::check_label(t, s);
  switch (t) {
    case AlgebraType::D2: {
      auto v = singular_vector(SingularFamily::B, s.l, 0, n);
      return {v, v};
    }
    case AlgebraType::A2: {
      auto v = singular_vector(SingularFamily::A2pair, s.l, s.eps, n);
      return {v, v};
    }
    case AlgebraType::C1: {
      auto v = singular_vector(SingularFamily::C, s.l, s.eps, n);
      if (s.l % 2 == 1) return {v, singular_vector(SingularFamily::C, s.l, -s.eps, n)};
      return {v, v};
    }
    case AlgebraType::A1: break;
  }
  throw std::invalid_argument("no spectral decomposition is modelled for A1");
}

/// P R(z) v with R = (K (x) 1) S (1 (x) K^{-1}) and P the swap of the factors.
inline VectorState<Series> apply_pr(const PairOperator& S, const State& v) {
  const auto n = static_cast<std::size_t>(S.n());
  const Scalar c = gauge_constant();
  VectorState<Series> out;
  for (const auto& [ij, x] : v.terms()) {
    const int wj = weight(ij, n, n);
    for (const auto& [ab, ser] : S.column(ij))
      out.add(concat(slice(ab, n, n), slice(ab, 0, n)), (x * c.pow(weight(ab, 0, n) - wj)) * ser);
  }
  return out;
}

inline VectorState<Series> lift(const State& v, int order) {
  VectorState<Series> out;
  for (const auto& [m, c] : v.terms()) out.add(m, Series(c, order));
  return out;
}

/// P R(z) v = rho(z) v' for one label; S^{s,t} must be the one paired with t.
inline Report check_spectral(const SSpec& sspec, AlgebraType t, const SpectralLabel& s) {
  sspec.validate();
  if (paired_algebra(sspec.s, sspec.t) != t)
    throw std::invalid_argument("S^{" + std::to_string(sspec.s) + "," + std::to_string(sspec.t) + "} is not paired with " +
                                to_string(t));
  const auto [v, target] = spectral_vectors(t, s, sspec.n);
  if (sspec.parity && v.block && *sspec.parity != *v.block)
    throw std::invalid_argument("parity block of S differs from that of " + v.name);
  SSpec full = sspec;
  full.parity.reset();
  const int N = sspec.order;
  const Series rho = eigenvalue_product(t, s, N);
  Report rep{.id = "spectral:" + to_string(t) + ":" + to_string(s)};
  rep.expect_equal(apply_pr(s_operator(full), v.state), rho * lift(target.state, N), 0, {s.l, s.eps},
                   "P R(z) " + v.name + " = rho " + target.name);
  return rep;
}

/// Every label with l <= max_l for the algebra paired with S^{s,t}.
inline std::vector<SpectralLabel> spectral_labels(AlgebraType t, int n, int max_l) {
  std::vector<SpectralLabel> out;
  for (int l = 0; l <= max_l; ++l) {
    if (t == AlgebraType::D2) {
      out.push_back({l, 0});
      continue;
    }
    for (int eps : {1, -1}) {
      if (l == 0 && eps < 0 && n < 2) continue;
      out.push_back({l, eps});
    }
  }
  return out;
}

inline Report check_spectral_all(AlgebraType t, int n, int max_l, int order) {
  const int s = t == AlgebraType::C1 ? 2 : 1;
  const int tt = t == AlgebraType::D2 ? 1 : 2;
  const SSpec spec{.s = s, .t = tt, .n = n, .order = order};
  const auto labels = spectral_labels(t, n, max_l);
  return parallel_sweep("spectral:" + to_string(t), labels.size(), [&](std::size_t k, Report& rep) {
    Report one = check_spectral(spec, t, labels[k]);
    if (one.pass()) rep.ok();
    else {
      auto f = *one.first_failure;
      f.ordinal = k;
      f.where += " [" + to_string(labels[k]) + "]";
      rep.fail(std::move(f));
    }
  });
}

}  // namespace tetra
